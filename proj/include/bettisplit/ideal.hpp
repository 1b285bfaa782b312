#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bettisplit/subset.hpp"

namespace bettisplit {

/// Ordered variable names; the index order is the one lex comparisons use.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    int index_of(const std::string& name) const;  // -1 when absent

    bool operator==(const VariableSet& o) const { return names_ == o.names_; }

    /// x1, x2, ..., xn.
    static std::shared_ptr<const VariableSet> numbered(const std::string& stem, int n);

    /// Row-major grid for d-partite clutters: row i in 1..d, column j in 1..n.
    /// Rows are aliased x/y/z/t when d <= 4, x_{i,j} otherwise.
    static std::shared_ptr<const VariableSet> grid(int d, int n);

private:
    std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

/// A squarefree monomial is just its support.
using SqfMonomial = Mask;

/// Squarefree monomial ideal held by its minimal generators, which always
/// form an antichain under divisibility. Generators are kept sorted by
/// (degree, support mask). The zero ideal has no generators; the unit ideal
/// has the single empty-support generator.
class SquarefreeIdeal {
public:
    SquarefreeIdeal() = default;

    static SquarefreeIdeal zero(VarsPtr vars) { return SquarefreeIdeal(std::move(vars), {}); }
    static SquarefreeIdeal unit(VarsPtr vars) { return SquarefreeIdeal(std::move(vars), {0}); }

    /// Minimalizes arbitrary generators (drops multiples and duplicates).
    static SquarefreeIdeal from_generators(VarsPtr vars, std::vector<SqfMonomial> gens);

    const VarsPtr& variables() const { return vars_; }
    const std::vector<SqfMonomial>& gens() const { return gens_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0] == 0; }

    /// Union of all generator supports.
    Mask support() const;

    /// True iff the monomial with the given support lies in the ideal.
    bool contains_monomial(SqfMonomial m) const;

    /// Degree shared by all generators, or nullopt (zero ideal included).
    std::optional<int> generated_in_single_degree() const;

    bool operator==(const SquarefreeIdeal& o) const;

private:
    SquarefreeIdeal(VarsPtr vars, std::vector<SqfMonomial> gens)
        : vars_(std::move(vars)), gens_(std::move(gens)) {}

    VarsPtr vars_;
    std::vector<SqfMonomial> gens_;
};

/// G(J) u G(K), minimalized. Throws on distinct variable sets.
SquarefreeIdeal sum(const SquarefreeIdeal& j, const SquarefreeIdeal& k);

/// Pairwise lcms, minimalized. Throws on distinct variable sets.
SquarefreeIdeal intersect(const SquarefreeIdeal& j, const SquarefreeIdeal& k);

/// The product (y : y in n_vars) * I. Requires the scaling variables to be
/// disjoint from every generator support; n_vars empty yields the zero ideal.
SquarefreeIdeal scale_by_variables(Mask n_vars, const SquarefreeIdeal& i);

/// Minimal generators of the Alexander dual: the minimal transversals of the
/// generator supports, built edge by edge. Throws on the unit ideal.
SquarefreeIdeal alexander_dual(const SquarefreeIdeal& i);

/// Linear-quotients test for an explicit generator order u_1, ..., u_m: for
/// every i and j < i some k < i must satisfy supp(u_k) \ supp(u_i) = {x_h}
/// with x_h in supp(u_j) \ supp(u_i). Throws when `order` is not a
/// permutation of G(I).
bool has_linear_quotients_order(const SquarefreeIdeal& i, const std::vector<SqfMonomial>& order);

struct LinearQuotientsSearch {
    std::optional<std::vector<SqfMonomial>> order;  // an admissible order, if found
    bool exhaustive = true;  // false when the node budget ran out before deciding
};

/// Looks for an admissible order: descending lex first, then ascending lex,
/// then backtracking capped at `node_budget` nodes. A nullopt order with
/// exhaustive=false means "unknown", not "none exists".
LinearQuotientsSearch find_linear_quotients_order(const SquarefreeIdeal& i,
                                                  long long node_budget = 1000000);

/// Lex comparison with x1 > x2 > ...: the smaller-index variable in the
/// symmetric difference decides; equal supports compare equal.
bool lex_greater(SqfMonomial a, SqfMonomial b);

std::string to_string(const VariableSet& vars, SqfMonomial m);
std::string to_string(const SquarefreeIdeal& i);

}  // namespace bettisplit

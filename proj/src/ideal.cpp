#include "bettisplit/ideal.hpp"

#include <algorithm>

namespace bettisplit {

namespace {

void check_same_variables(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    if (!(*a.variables() == *b.variables()))
        throw std::invalid_argument("ideals live over different variable sets");
}

bool degree_mask_lt(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

/// Sorts by (degree, mask), dedupes, and drops divisibility-multiples.
std::vector<SqfMonomial> minimalize(std::vector<SqfMonomial> gens) {
    std::sort(gens.begin(), gens.end(), degree_mask_lt);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<SqfMonomial> kept;
    for (SqfMonomial g : gens) {
        bool divisible = false;
        for (SqfMonomial k : kept)
            if (subset_of(k, g)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(g);
    }
    return kept;
}

}  // namespace

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > 64) throw std::invalid_argument("at most 64 variables supported");
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate variable name: " + names_[i]);
}

int VariableSet::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

VarsPtr VariableSet::numbered(const std::string& stem, int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return std::make_shared<const VariableSet>(std::move(names));
}

VarsPtr VariableSet::grid(int d, int n) {
    if (d < 1 || n < 0 || d * n > 64)
        throw std::invalid_argument("grid variable set must fit in 64 variables");
    static const char* kAlias[4] = {"x", "y", "z", "t"};
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(d * n));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= n; ++j) {
            if (d <= 4)
                names.push_back(std::string(kAlias[i - 1]) + std::to_string(j));
            else
                names.push_back("x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
        }
    return std::make_shared<const VariableSet>(std::move(names));
}

SquarefreeIdeal SquarefreeIdeal::from_generators(VarsPtr vars, std::vector<SqfMonomial> gens) {
    Mask ambient = vars->size() == 64 ? ~Mask{0} : (bit(vars->size()) - 1);
    for (SqfMonomial g : gens)
        if (!subset_of(g, ambient))
            throw std::invalid_argument("generator uses a variable outside the variable set");
    return SquarefreeIdeal(std::move(vars), minimalize(std::move(gens)));
}

Mask SquarefreeIdeal::support() const {
    Mask s = 0;
    for (SqfMonomial g : gens_) s |= g;
    return s;
}

bool SquarefreeIdeal::contains_monomial(SqfMonomial m) const {
    for (SqfMonomial g : gens_)
        if (subset_of(g, m)) return true;
    return false;
}

std::optional<int> SquarefreeIdeal::generated_in_single_degree() const {
    if (gens_.empty()) return std::nullopt;
    int d = popcount(gens_.front());
    for (SqfMonomial g : gens_)
        if (popcount(g) != d) return std::nullopt;
    return d;
}

bool SquarefreeIdeal::operator==(const SquarefreeIdeal& o) const {
    return *vars_ == *o.vars_ && gens_ == o.gens_;
}

SquarefreeIdeal sum(const SquarefreeIdeal& j, const SquarefreeIdeal& k) {
    check_same_variables(j, k);
    std::vector<SqfMonomial> gens = j.gens();
    gens.insert(gens.end(), k.gens().begin(), k.gens().end());
    return SquarefreeIdeal::from_generators(j.variables(), std::move(gens));
}

SquarefreeIdeal intersect(const SquarefreeIdeal& j, const SquarefreeIdeal& k) {
    check_same_variables(j, k);
    std::vector<SqfMonomial> gens;
    gens.reserve(j.gens().size() * k.gens().size());
    for (SqfMonomial a : j.gens())
        for (SqfMonomial b : k.gens()) gens.push_back(a | b);
    return SquarefreeIdeal::from_generators(j.variables(), std::move(gens));
}

SquarefreeIdeal scale_by_variables(Mask n_vars, const SquarefreeIdeal& i) {
    if (n_vars & i.support())
        throw std::invalid_argument("scaling variables overlap a generator support");
    std::vector<SqfMonomial> gens;
    for_each_bit(n_vars, [&](int v) {
        for (SqfMonomial g : i.gens()) gens.push_back(g | bit(v));
    });
    return SquarefreeIdeal::from_generators(i.variables(), std::move(gens));
}

SquarefreeIdeal alexander_dual(const SquarefreeIdeal& i) {
    if (i.is_unit()) throw std::invalid_argument("the unit ideal has no Alexander dual");
    // Incremental minimal-transversal construction: T holds the minimal
    // transversals of the supports processed so far.
    std::vector<Mask> t = {0};
    for (SqfMonomial e : i.gens()) {
        std::vector<Mask> next;
        for (Mask s : t) {
            if (s & e) {
                next.push_back(s);
            } else {
                for_each_bit(e, [&](int v) { next.push_back(s | bit(v)); });
            }
        }
        // Every candidate is a transversal and every minimal one occurs, so
        // minimalizing leaves exactly the minimal transversals.
        std::sort(next.begin(), next.end(), degree_mask_lt);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Mask> pruned;
        for (Mask c : next) {
            bool dominated = false;
            for (Mask p : pruned)
                if (subset_of(p, c)) {
                    dominated = true;
                    break;
                }
            if (!dominated) pruned.push_back(c);
        }
        t = std::move(pruned);
    }
    return SquarefreeIdeal::from_generators(i.variables(), std::move(t));
}

bool lex_greater(SqfMonomial a, SqfMonomial b) {
    if (a == b) return false;
    return has_bit(a, lowest_bit(a ^ b));
}

namespace {

/// True iff `next` may extend the admissible prefix: every earlier generator
/// must lose some variable that a size-one colon difference also provides.
bool prefix_extends(const std::vector<SqfMonomial>& prefix, SqfMonomial next) {
    Mask single = 0;
    for (SqfMonomial u : prefix) {
        Mask diff = u & ~next;
        if (popcount(diff) == 1) single |= diff;
    }
    for (SqfMonomial u : prefix)
        if ((u & ~next & single) == 0) return false;
    return true;
}

bool backtrack_order(const std::vector<SqfMonomial>& candidates, std::vector<SqfMonomial>& prefix,
                     std::vector<bool>& used, long long& budget, bool& exhausted) {
    if (prefix.size() == candidates.size()) return true;
    for (size_t c = 0; c < candidates.size(); ++c) {
        if (used[c]) continue;
        if (--budget < 0) {
            exhausted = true;
            return false;
        }
        if (!prefix_extends(prefix, candidates[c])) continue;
        used[c] = true;
        prefix.push_back(candidates[c]);
        if (backtrack_order(candidates, prefix, used, budget, exhausted)) return true;
        prefix.pop_back();
        used[c] = false;
        if (exhausted) return false;
    }
    return false;
}

}  // namespace

bool has_linear_quotients_order(const SquarefreeIdeal& i, const std::vector<SqfMonomial>& order) {
    std::vector<SqfMonomial> sorted = order;
    std::sort(sorted.begin(), sorted.end(), degree_mask_lt);
    if (sorted != i.gens()) throw std::invalid_argument("order is not a permutation of G(I)");
    std::vector<SqfMonomial> prefix;
    for (SqfMonomial u : order) {
        if (!prefix_extends(prefix, u)) return false;
        prefix.push_back(u);
    }
    return true;
}

LinearQuotientsSearch find_linear_quotients_order(const SquarefreeIdeal& i, long long node_budget) {
    if (i.num_gens() <= 1) return {i.gens(), true};

    std::vector<SqfMonomial> desc = i.gens();
    std::sort(desc.begin(), desc.end(), lex_greater);
    if (has_linear_quotients_order(i, desc)) return {desc, true};

    std::vector<SqfMonomial> asc(desc.rbegin(), desc.rend());
    if (has_linear_quotients_order(i, asc)) return {asc, true};

    std::vector<SqfMonomial> prefix;
    std::vector<bool> used(desc.size(), false);
    bool exhausted = false;
    long long budget = node_budget;
    if (backtrack_order(desc, prefix, used, budget, exhausted)) return {prefix, true};
    if (exhausted) return {std::nullopt, false};
    return {std::nullopt, true};
}

std::string to_string(const VariableSet& vars, SqfMonomial m) {
    if (m == 0) return "1";
    std::string out;
    for_each_bit(m, [&](int v) { out += vars.name(v); });
    return out;
}

std::string to_string(const SquarefreeIdeal& i) {
    if (i.is_zero()) return "(0)";
    std::string out = "(";
    for (size_t g = 0; g < i.gens().size(); ++g) {
        if (g) out += ", ";
        out += to_string(*i.variables(), i.gens()[g]);
    }
    return out + ")";
}

}  // namespace bettisplit

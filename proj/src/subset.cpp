#include "bettisplit/subset.hpp"

namespace bettisplit {

const BinomialTable& binomial_table() {
    static const BinomialTable table(70);
    return table;
}

}  // namespace bettisplit

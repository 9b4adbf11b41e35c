#include "scx/exact_rank.hpp"

namespace scx {

int exact_rank(std::vector<std::vector<Integer>> m) {
    const int rows = int(m.size());
    const int cols = rows ? int(m[0].size()) : 0;
    int rank = 0;
    Integer prev_pivot = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot_row = -1;
        for (int r = rank; r < rows; ++r)
            if (m[size_t(r)][size_t(col)] != 0) {
                pivot_row = r;
                break;
            }
        if (pivot_row < 0) continue;
        std::swap(m[size_t(rank)], m[size_t(pivot_row)]);
        const Integer pivot = m[size_t(rank)][size_t(col)];
        for (int r = rank + 1; r < rows; ++r) {
            const Integer factor = m[size_t(r)][size_t(col)];
            for (int c = col; c < cols; ++c) {
                Integer value = pivot * m[size_t(r)][size_t(c)] -
                                factor * m[size_t(rank)][size_t(c)];
                m[size_t(r)][size_t(c)] = value / prev_pivot;  // exact division
            }
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace scx

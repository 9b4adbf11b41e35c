#include "scx/coboundary.hpp"

#include "scx/exact_rank.hpp"

namespace scx {

std::vector<std::vector<Integer>> CoboundaryMatrix::to_integer() const {
    std::vector<std::vector<Integer>> m(size_t(rows), std::vector<Integer>(size_t(cols), 0));
    for (int r = 0; r < rows; ++r)
        for (const Entry& e : row_entries[size_t(r)]) m[size_t(r)][size_t(e.col)] = e.sign;
    return m;
}

RationalMatrix CoboundaryMatrix::to_rational() const {
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (const Entry& e : row_entries[size_t(r)]) m(r, e.col) = e.sign;
    return m;
}

CoboundaryMatrix coboundary(const WeightedComplex& k, int n) {
    CoboundaryMatrix d;
    d.n = n;
    d.cols = k.num_faces(n);
    d.rows = k.num_faces(n + 1);
    d.row_entries.resize(size_t(d.rows));
    const auto& tops = k.faces(n + 1);
    for (int r = 0; r < d.rows; ++r) {
        const Simplex& fbar = tops[size_t(r)];
        for (int i = 0; i < fbar.size(); ++i) {
            Simplex f = fbar.facet_omitting(i);
            int col = *k.face_index(f);
            d.row_entries[size_t(r)].push_back({col, (i % 2 == 0) ? 1 : -1});
        }
    }
    return d;
}

WeightDiagonal weight_diagonal(const WeightedComplex& k, int n) {
    return WeightDiagonal{n, k.weights(n)};
}

RationalMatrix formal_adjoint(const CoboundaryMatrix& d, const WeightDiagonal& w_n,
                              const WeightDiagonal& w_np1) {
    RationalMatrix a(d.cols, d.rows);
    for (int r = 0; r < d.rows; ++r) {
        const Rational& wr = w_np1.values[size_t(r)];
        for (const auto& e : d.row_entries[size_t(r)]) {
            const Rational& wc = w_n.values[size_t(e.col)];
            if (wc == 0) continue;  // extended by zero on weight-zero faces
            a(e.col, r) = Rational(e.sign) * wr / wc;
        }
    }
    return a;
}

int coboundary_rank(const WeightedComplex& k, int n) {
    if (k.num_faces(n) == 0 || k.num_faces(n + 1) == 0) return 0;
    return exact_rank(coboundary(k, n).to_integer());
}

}  // namespace scx

#include "ncmod/dmatrix.hpp"

#include <ostream>
#include <sstream>

namespace ncmod {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

DMatrix dmatrix_from(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DMatrix out = dmatrix(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("dmatrix_from: ragged rows");
        std::size_t j = 0;
        for (long v : row) out(i, j++) = Rational(v);
        ++i;
    }
    return out;
}

DMatrix dcolumn(const std::vector<Rational>& entries) {
    DMatrix out = dmatrix(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) out(i, 0) = entries[i];
    return out;
}

namespace {

struct Echelon {
    DMatrix mat;                     // reduced row echelon form
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;
};

// Reduced row echelon form with the deterministic pivot rule: for each
// column, take the first nonzero entry below the processed rows.
Echelon reduce(DMatrix m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = next_row; r < rows; ++r)
            if (!m(r, col).is_zero()) { pivot = r; break; }
        if (pivot == rows) continue;
        if (pivot != next_row)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(pivot, j), m(next_row, j));
        Rational inv = m(next_row, col).inverse();
        for (std::size_t j = col; j < cols; ++j) m(next_row, j) = m(next_row, j) * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row || m(r, col).is_zero()) continue;
            Rational factor = m(r, col);
            for (std::size_t j = col; j < cols; ++j)
                m(r, j) = m(r, j) - factor * m(next_row, j);
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0, p = 0; col < cols; ++col) {
        if (p < pivot_cols.size() && pivot_cols[p] == col) { ++p; continue; }
        free_cols.push_back(col);
    }
    return {std::move(m), std::move(pivot_cols), std::move(free_cols)};
}

std::vector<DMatrix> nullspace_from_echelon(const Echelon& e, std::size_t unknowns) {
    std::vector<DMatrix> basis;
    for (std::size_t fc : e.free_cols) {
        DMatrix v = dmatrix(unknowns, 1);
        v(fc, 0) = Rational(1);
        for (std::size_t p = 0; p < e.pivot_cols.size(); ++p)
            v(e.pivot_cols[p], 0) = -e.mat(p, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

LinearSolution solve_linear(const DMatrix& a, const DMatrix& b) {
    if (b.cols() != 1) throw DimensionError("solve_linear: b must be a column");
    if (a.rows() != b.rows()) throw DimensionError("solve_linear: row counts differ");
    std::size_t n = a.cols();
    DMatrix aug = dmatrix(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b(i, 0);
    }
    Echelon e = reduce(std::move(aug));

    // Inconsistent iff some pivot lands in the augmented column.
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == n)
        return {SolutionKind::NoSolution, dmatrix(0, 0), {}};

    DMatrix particular = dmatrix(n, 1);
    for (std::size_t p = 0; p < e.pivot_cols.size(); ++p)
        particular(e.pivot_cols[p], 0) = e.mat(p, n);

    if (e.pivot_cols.size() == n)
        return {SolutionKind::Unique, std::move(particular), {}};

    Echelon coeff{e.mat, e.pivot_cols, {}};
    for (std::size_t col = 0, p = 0; col < n; ++col) {
        if (p < e.pivot_cols.size() && e.pivot_cols[p] == col) { ++p; continue; }
        coeff.free_cols.push_back(col);
    }
    return {SolutionKind::Infinite, std::move(particular),
            nullspace_from_echelon(coeff, n)};
}

std::size_t rank(const DMatrix& a) {
    return reduce(a).pivot_cols.size();
}

std::vector<DMatrix> nullspace(const DMatrix& a) {
    Echelon e = reduce(a);
    return nullspace_from_echelon(e, a.cols());
}

std::string to_string(const DMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < a.cols(); ++j)
            os << (j == 0 ? "" : ", ") << a(i, j).to_string();
        os << "]";
        if (i + 1 < a.rows()) os << ",";
    }
    os << "]";
    return os.str();
}

} // namespace ncmod

#include "pgiso/gf2.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pgiso {

namespace {

void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("dimension must be between 1 and " +
                                    std::to_string(kMaxDimension));
}

}  // namespace

Point::Point(std::uint32_t mask, int n) : mask_(mask), n_(n) {
    check_dimension(n);
    if (n < 32 && (mask >> n) != 0)
        throw std::invalid_argument("point mask has bits beyond dimension " + std::to_string(n));
}

int Point::order() const {
    return std::popcount(mask_);
}

Point operator+(Point a, Point b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("cannot add points of different dimensions");
    a.mask_ ^= b.mask_;
    return a;
}

std::string point_to_label(const Point& p) {
    if (p.is_zero())
        throw std::invalid_argument("the zero vector has no effect label");
    std::string label;
    for (int i = 1; i <= p.dimension(); ++i)
        if (p.bit(i)) label.push_back(static_cast<char>('A' + i - 1));
    return label;
}

Point label_to_point(std::string_view label, int n) {
    check_dimension(n);
    if (label.empty())
        throw std::invalid_argument("empty effect label");
    std::uint32_t mask = 0;
    char prev = 0;
    for (char ch : label) {
        if (ch < 'A' || ch >= 'A' + n)
            throw std::invalid_argument("label '" + std::string(label) +
                                        "' uses a letter outside the first " +
                                        std::to_string(n) + " factors");
        if (prev && ch <= prev)
            throw std::invalid_argument("label '" + std::string(label) +
                                        "' must list letters in strictly ascending order");
        prev = ch;
        mask |= 1u << (ch - 'A');
    }
    return Point(mask, n);
}

std::vector<Point> span(std::span<const Point> basis) {
    if (basis.empty())
        throw std::invalid_argument("span of an empty set");
    const int n = basis[0].dimension();
    for (const Point& p : basis)
        if (p.dimension() != n)
            throw std::invalid_argument("span over points of mixed dimensions");

    // Grow the subspace one generator at a time; masks stay deduplicated.
    std::set<std::uint32_t> masks = {0};
    for (const Point& p : basis) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t m : masks) next.push_back(m ^ p.mask());
        masks.insert(next.begin(), next.end());
    }
    masks.erase(0);

    std::vector<Point> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) out.emplace_back(m, n);
    return out;
}

int rank_of_points(std::span<const Point> points) {
    // Incremental elimination over the point masks.
    std::uint32_t pivots[kMaxDimension] = {};
    int rank = 0;
    for (const Point& p : points) {
        std::uint32_t cur = p.mask();
        while (cur) {
            int h = 31 - std::countl_zero(cur);
            if (pivots[h]) {
                cur ^= pivots[h];
            } else {
                pivots[h] = cur;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

bool points_independent(std::span<const Point> points) {
    return rank_of_points(points) == static_cast<int>(points.size());
}

GF2Matrix::GF2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || rows > kMaxDimension || cols < 1 || cols > kMaxDimension)
        throw std::invalid_argument("matrix dimensions out of range");
    row_bits_.assign(static_cast<std::size_t>(rows), 0u);
}

GF2Matrix GF2Matrix::identity(int n) {
    GF2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::from_columns(std::span<const Point> columns) {
    if (columns.empty())
        throw std::invalid_argument("matrix from empty column set");
    const int rows = columns[0].dimension();
    GF2Matrix m(rows, static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (columns[static_cast<std::size_t>(c)].dimension() != rows)
            throw std::invalid_argument("matrix columns of mixed dimensions");
        for (int r = 0; r < rows; ++r)
            m.set(r, c, columns[static_cast<std::size_t>(c)].bit(r + 1));
    }
    return m;
}

void GF2Matrix::set(int r, int c, bool v) {
    auto& row = row_bits_[static_cast<std::size_t>(r)];
    if (v)
        row |= 1u << c;
    else
        row &= ~(1u << c);
}

Point GF2Matrix::column(int c) const {
    std::uint32_t mask = 0;
    for (int r = 0; r < rows_; ++r)
        if (at(r, c)) mask |= 1u << r;
    return Point(mask, rows_);
}

Point GF2Matrix::apply(const Point& p) const {
    if (p.dimension() != cols_)
        throw std::invalid_argument("matrix-point dimension mismatch");
    std::uint32_t out = 0;
    for (int r = 0; r < rows_; ++r)
        out |= static_cast<std::uint32_t>(std::popcount(row_bits_[static_cast<std::size_t>(r)] &
                                                        p.mask()) & 1) << r;
    return Point(out, rows_);
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    GF2Matrix out(a.rows_, b.cols_);
    // out(r,c) = parity over k of a(r,k) b(k,c): fold b's rows selected by a.
    for (int r = 0; r < a.rows_; ++r) {
        std::uint32_t acc = 0;
        std::uint32_t sel = a.row_bits_[static_cast<std::size_t>(r)];
        while (sel) {
            int k = std::countr_zero(sel);
            sel &= sel - 1;
            acc ^= b.row_bits_[static_cast<std::size_t>(k)];
        }
        out.row_bits_[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

int GF2Matrix::rank() const {
    std::vector<std::uint32_t> rows = row_bits_;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if ((rows[static_cast<std::size_t>(r)] >> c) & 1u) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < rows_; ++r)
            if (r != rank && ((rows[static_cast<std::size_t>(r)] >> c) & 1u))
                rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank;
}

std::string GF2Matrix::to_text() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out.push_back(' ');
            out.push_back(at(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

GF2Matrix GF2Matrix::parse_text(std::string_view text) {
    std::vector<std::vector<bool>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<bool> row;
        std::string tok;
        while (ls >> tok) {
            if (tok == "0")
                row.push_back(false);
            else if (tok == "1")
                row.push_back(true);
            else
                throw std::invalid_argument("matrix entries must be 0 or 1, got '" + tok + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("empty matrix text");
    const std::size_t cols = rows[0].size();
    for (const auto& row : rows)
        if (row.size() != cols)
            throw std::invalid_argument("ragged matrix rows");
    GF2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            m.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return m;
}

std::strong_ordering operator<=>(const GF2Matrix& a, const GF2Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.row_bits_ <=> b.row_bits_;
}

GF2Matrix invert(const GF2Matrix& m) {
    if (m.rows() != m.cols())
        throw std::domain_error("only square matrices can be inverted");
    const int n = m.rows();
    // Gauss-Jordan on [m | I] packed as 2n-bit rows.
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        rows[static_cast<std::size_t>(r)] =
            static_cast<std::uint64_t>(m.row_mask(r)) | (1ull << (n + r));
    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if ((rows[static_cast<std::size_t>(r)] >> c) & 1u) { pivot = r; break; }
        if (pivot < 0)
            throw std::domain_error("matrix is singular");
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < n; ++r)
            if (r != rank && ((rows[static_cast<std::size_t>(r)] >> c) & 1u))
                rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    GF2Matrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.set(r, c, (rows[static_cast<std::size_t>(r)] >> (n + c)) & 1u);
    return out;
}

}  // namespace pgiso

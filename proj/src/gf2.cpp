#include "symcover/gf2.hpp"

#include <algorithm>
#include <bit>

namespace symcover {

namespace {
std::uint64_t mask_for(int len) {
    return len >= 64 ? ~0ULL : ((1ULL << len) - 1);
}
}  // namespace

Gf2Vector::Gf2Vector(int len, std::uint64_t bits) : bits_(bits), len_(len) {
    if (len < 0 || len > 64)
        throw DimensionError("Gf2Vector length must be in [0,64], got " + std::to_string(len));
    bits_ &= mask_for(len);
}

Gf2Vector Gf2Vector::from_support(int len, std::span<const int> support) {
    Gf2Vector v(len);
    for (int i : support) v.set(i, true);
    return v;
}

Gf2Vector Gf2Vector::from_support(int len, std::initializer_list<int> support) {
    return from_support(len, std::span<const int>(support.begin(), support.size()));
}

Gf2Vector Gf2Vector::ones(int len) { return Gf2Vector(len, mask_for(len)); }

Gf2Vector Gf2Vector::alternating(int len) {
    return Gf2Vector(len, 0x5555555555555555ULL & mask_for(len));
}

Gf2Vector Gf2Vector::unit(int len, int i) {
    Gf2Vector v(len);
    v.set(i, true);
    return v;
}

void Gf2Vector::check_index(int i) const {
    if (i < 0 || i >= len_)
        throw DimensionError("index " + std::to_string(i) + " out of range for length " +
                             std::to_string(len_));
}

bool Gf2Vector::get(int i) const {
    check_index(i);
    return (bits_ >> i) & 1;
}

void Gf2Vector::set(int i, bool value) {
    check_index(i);
    if (value)
        bits_ |= (1ULL << i);
    else
        bits_ &= ~(1ULL << i);
}

int Gf2Vector::weight() const { return std::popcount(bits_); }

std::vector<int> Gf2Vector::support() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

Gf2Vector Gf2Vector::operator+(const Gf2Vector& other) const {
    Gf2Vector v = *this;
    v += other;
    return v;
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
    if (len_ != other.len_)
        throw DimensionError("length mismatch in Gf2Vector addition");
    bits_ ^= other.bits_;
    return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
    if (len_ != other.len_)
        throw DimensionError("length mismatch in Gf2Vector pairing");
    return std::popcount(bits_ & other.bits_) & 1;
}

bool Gf2Vector::operator<(const Gf2Vector& other) const {
    if (len_ != other.len_) return len_ < other.len_;
    return bits_ < other.bits_;
}

std::string Gf2Vector::to_string() const {
    std::string s(len_, '0');
    for (int i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

Gf2Matrix::Gf2Matrix(int nrows, int ncols) : rows_(nrows, Gf2Vector(ncols)), ncols_(ncols) {}

Gf2Matrix::Gf2Matrix(std::vector<Gf2Vector> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        ncols_ = rows_[0].len();
        for (const auto& r : rows_)
            if (r.len() != ncols_) throw DimensionError("ragged rows in Gf2Matrix");
    }
}

Gf2Matrix Gf2Matrix::from_column_codes(int n, std::span<const std::uint32_t> codes) {
    Gf2Matrix m(n, static_cast<int>(codes.size()));
    for (int j = 0; j < m.ncols(); ++j) {
        if (codes[j] >> n)
            throw DimensionError("column code " + std::to_string(codes[j]) +
                                 " does not fit in " + std::to_string(n) + " rows");
        for (int i = 0; i < n; ++i)
            if ((codes[j] >> i) & 1) m.set(i, j, true);
    }
    return m;
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

std::uint32_t Gf2Matrix::column_code(int j) const {
    std::uint32_t code = 0;
    for (int i = 0; i < nrows(); ++i)
        if (get(i, j)) code |= (1u << i);
    return code;
}

std::vector<std::uint32_t> Gf2Matrix::column_codes() const {
    std::vector<std::uint32_t> out(ncols());
    for (int j = 0; j < ncols(); ++j) out[j] = column_code(j);
    return out;
}

std::string Gf2Matrix::to_string() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

RrefResult rref(const Gf2Matrix& m) {
    std::vector<Gf2Vector> rows = m.rows();
    std::vector<int> pivots;
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < m.ncols() && r < nrows; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i) {
            if (rows[i].get(c)) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < nrows; ++i)
            if (i != r && rows[i].get(c)) rows[i] += rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return RrefResult{Gf2Matrix(std::move(rows)), r, std::move(pivots)};
}

bool in_row_space(const RrefResult& r, const Gf2Vector& u) {
    Gf2Vector v = u;
    for (int i = 0; i < r.rank; ++i)
        if (v.get(r.pivots[i])) v += r.r.row(i);
    return v.is_zero();
}

bool in_row_space(const Gf2Matrix& m, const Gf2Vector& u) {
    if (u.len() != m.ncols())
        throw DimensionError("vector length " + std::to_string(u.len()) +
                             " does not match matrix with " + std::to_string(m.ncols()) +
                             " columns");
    return in_row_space(rref(m), u);
}

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (int p : r.pivots) is_pivot[p] = true;

    std::vector<Gf2Vector> basis;
    for (int c = 0; c < m.ncols(); ++c) {
        if (is_pivot[c]) continue;
        Gf2Vector v(m.ncols());
        v.set(c, true);
        for (int i = 0; i < r.rank; ++i)
            if (r.r.get(i, c)) v.set(r.pivots[i], true);
        basis.push_back(v);
    }
    return basis;
}

RowSpaceRange::RowSpaceRange(const Gf2Matrix& m) : len_(m.ncols()) {
    RrefResult r = rref(m);
    if (r.rank > 24)
        throw CapacityError("row-space enumeration capped at rank 24, got rank " +
                            std::to_string(r.rank));
    basis_ = r.r.rows();
    size_ = 1ULL << r.rank;
}

RowSpaceRange::iterator::iterator(const RowSpaceRange* range, std::uint64_t index)
    : range_(range), index_(index), current_(range->len_) {
    if (index_ >= range_->size_) return;  // end iterator carries no value
    // Gray-code position: element at index c is the XOR of basis rows in c^(c>>1).
    std::uint64_t gray = index ^ (index >> 1);
    for (std::uint64_t b = gray; b; b &= b - 1)
        current_ += range_->basis_[std::countr_zero(b)];
}

RowSpaceRange::iterator& RowSpaceRange::iterator::operator++() {
    std::uint64_t old_gray = index_ ^ (index_ >> 1);
    ++index_;
    std::uint64_t new_gray = index_ ^ (index_ >> 1);
    std::uint64_t diff = old_gray ^ new_gray;
    if (diff && index_ < range_->size_) current_ += range_->basis_[std::countr_zero(diff)];
    return *this;
}

std::vector<Gf2Vector> enumerate_row_space(const Gf2Matrix& m) {
    RowSpaceRange range(m);
    std::vector<Gf2Vector> out;
    out.reserve(range.size());
    for (const auto& v : range) out.push_back(v);
    return out;
}

}  // namespace symcover

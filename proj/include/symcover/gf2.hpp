#ifndef SYMCOVER_GF2_HPP
#define SYMCOVER_GF2_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Dense linear algebra over Z_2.  Vectors live in one machine word
// (the paper's instances never exceed m = 12 vertices; 64 is the hard cap),
// matrices are short row lists (n <= 8 in every use).

namespace symcover {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(int len, std::uint64_t bits = 0);

    static Gf2Vector from_support(int len, std::span<const int> support);
    static Gf2Vector from_support(int len, std::initializer_list<int> support);
    /// The all-one vector 1_m.
    static Gf2Vector ones(int len);
    /// The alternating vector eps_m = (1,0,1,0,...) starting with 1.
    static Gf2Vector alternating(int len);
    static Gf2Vector unit(int len, int i);

    int len() const { return len_; }
    std::uint64_t bits() const { return bits_; }
    bool get(int i) const;
    void set(int i, bool value);
    bool is_zero() const { return bits_ == 0; }
    int weight() const;
    std::vector<int> support() const;

    Gf2Vector operator+(const Gf2Vector& other) const;
    Gf2Vector& operator+=(const Gf2Vector& other);
    /// Standard pairing <u,v> over Z_2.
    bool dot(const Gf2Vector& other) const;

    bool operator==(const Gf2Vector& other) const = default;
    /// Numeric order on the bit pattern; used for deterministic sorting.
    bool operator<(const Gf2Vector& other) const;

    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
    int len_ = 0;

    void check_index(int i) const;
};

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int nrows, int ncols);
    explicit Gf2Matrix(std::vector<Gf2Vector> rows);

    /// Build an n x m matrix from per-column integer codes; bit j of a code
    /// is the entry in row j, so (xi_1,...,xi_4)^T <-> xi_1+2xi_2+4xi_3+8xi_4.
    static Gf2Matrix from_column_codes(int n, std::span<const std::uint32_t> codes);
    static Gf2Matrix identity(int n);

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const Gf2Vector& row(int i) const { return rows_[i]; }
    Gf2Vector& row(int i) { return rows_[i]; }
    const std::vector<Gf2Vector>& rows() const { return rows_; }

    bool get(int i, int j) const { return rows_[i].get(j); }
    void set(int i, int j, bool value) { rows_[i].set(j, value); }

    std::uint32_t column_code(int j) const;
    std::vector<std::uint32_t> column_codes() const;

    bool operator==(const Gf2Matrix& other) const = default;

    std::string to_string() const;

private:
    std::vector<Gf2Vector> rows_;
    int ncols_ = 0;
};

struct RrefResult {
    Gf2Matrix r;              // reduced row echelon form, zero rows dropped
    int rank = 0;
    std::vector<int> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const Gf2Matrix& m);

/// Membership test u in row(M) by back-substitution against rref(M).
bool in_row_space(const Gf2Matrix& m, const Gf2Vector& u);
bool in_row_space(const RrefResult& r, const Gf2Vector& u);

/// A basis of ker M (size = ncols - rank).
std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m);

/// Lazily enumerates row(M): exactly 2^rank vectors, the zero vector first,
/// Gray-code order.  Guard: rank <= 24.
class RowSpaceRange {
public:
    explicit RowSpaceRange(const Gf2Matrix& m);

    class iterator {
    public:
        iterator(const RowSpaceRange* range, std::uint64_t index);
        const Gf2Vector& operator*() const { return current_; }
        iterator& operator++();
        bool operator!=(const iterator& other) const { return index_ != other.index_; }

    private:
        const RowSpaceRange* range_;
        std::uint64_t index_;
        Gf2Vector current_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, size_); }
    std::uint64_t size() const { return size_; }

private:
    friend class iterator;
    std::vector<Gf2Vector> basis_;
    std::uint64_t size_ = 1;
    int len_ = 0;
};

std::vector<Gf2Vector> enumerate_row_space(const Gf2Matrix& m);

}  // namespace symcover

#endif

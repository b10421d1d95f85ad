#pragma once

// Dense bit-packed linear algebra over GF(2).
//
// Vectors are stored as little-endian 64-bit words: coordinate i lives in bit
// (i % 64) of word (i / 64). Unused high bits of the last word are always zero.
// The text form puts coordinate 0 first ("0110" has coordinates 1 and 2 set).

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lights_out/errors.hpp"

namespace lights_out {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_(word_count(n), 0) {}

  static BitVector ones(std::size_t n) {
    BitVector v(n);
    std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
    v.trim();
    return v;
  }

  static BitVector unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i);
    return v;
  }

  /// Characteristic vector of a vertex set.
  static BitVector characteristic(std::size_t n, std::span<const std::size_t> members) {
    BitVector v(n);
    for (auto i : members) v.set(i);
    return v;
  }

  /// Low `n` bits of `mask`; n must be at most 64.
  static BitVector from_mask(std::size_t n, std::uint64_t mask) {
    if (n > word_bits) throw InputError("from_mask: length exceeds 64");
    BitVector v(n);
    if (n > 0) v.words_[0] = mask;
    v.trim();
    return v;
  }

  static BitVector from_string(std::string_view text) {
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        v.set(i);
      } else if (text[i] != '0') {
        throw InputError("bitstring: invalid character '" + std::string(1, text[i]) + "' at position " +
                         std::to_string(i));
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }
  bool operator[](std::size_t i) const { return test(i); }

  BitVector& set(std::size_t i, bool value = true) {
    check_index(i);
    const word_type bit = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= bit;
    } else {
      words_[i / word_bits] &= ~bit;
    }
    return *this;
  }
  BitVector& reset(std::size_t i) { return set(i, false); }
  BitVector& flip(std::size_t i) {
    check_index(i);
    words_[i / word_bits] ^= word_type{1} << (i % word_bits);
    return *this;
  }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }
  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  BitVector complement() const {
    BitVector v(*this);
    for (auto& w : v.words_) w = ~w;
    v.trim();
    return v;
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  BitVector& operator|=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  /// Addition over GF(2) is XOR.
  BitVector& operator+=(const BitVector& other) { return *this ^= other; }

  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator+(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Orders by length, then lexicographically by text form.
  friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
    if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
    for (std::size_t k = 0; k < lhs.words_.size(); ++k) {
      const word_type diff = lhs.words_[k] ^ rhs.words_[k];
      if (diff != 0) {
        const word_type lowest = diff & (~diff + 1);
        return (lhs.words_[k] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  /// Indices of the set coordinates, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      word_type w = words_[k];
      while (w != 0) {
        out.push_back(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::uint64_t to_mask() const {
    if (size_ > word_bits) throw InputError("to_mask: length exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::span<const word_type> words() const noexcept { return words_; }

 private:
  static std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }

  void trim() {
    if (size_ % word_bits != 0 && !words_.empty()) {
      words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }
  }
  void check_index(std::size_t i) const {
    if (i >= size_) {
      throw InputError("bit index " + std::to_string(i) + " out of range for length " + std::to_string(size_));
    }
  }
  void check_same_size(const BitVector& other) const {
    if (other.size_ != size_) {
      throw InputError("length mismatch: " + std::to_string(size_) + " vs " + std::to_string(other.size_));
    }
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;

  friend bool dot(const BitVector& u, const BitVector& v);
};

/// Standard inner product over GF(2).
inline bool dot(const BitVector& u, const BitVector& v) {
  u.check_same_size(v);
  int acc = 0;
  for (std::size_t k = 0; k < u.words_.size(); ++k) acc ^= std::popcount(u.words_[k] & v.words_[k]) & 1;
  return acc != 0;
}

/// Weight mod 2, i.e. dot(1, v).
inline bool parity(const BitVector& v) { return (v.weight() & 1u) != 0; }

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BitMatrix from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw InputError("from_rows: ragged rows");
    }
    m.rows_ = std::move(rows);
    return m;
  }

  /// Parses rows such as {"110", "111", "011"}.
  static BitMatrix from_strings(std::span<const std::string_view> rows) {
    std::vector<BitVector> out;
    out.reserve(rows.size());
    for (auto r : rows) out.push_back(BitVector::from_string(r));
    return from_rows(std::move(out));
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool test(std::size_t r, std::size_t c) const { return row_at(r).test(c); }
  BitMatrix& set(std::size_t r, std::size_t c, bool value = true) {
    check_row(r);
    rows_[r].set(c, value);
    return *this;
  }
  const BitVector& row(std::size_t r) const { return row_at(r); }

  BitVector column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) v.set(r, rows_[r].test(c));
    return v;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (auto c : rows_[r].support()) t.rows_[c].set(r);
    }
    return t;
  }

  bool is_symmetric() const { return rows() == cols_ && *this == transpose(); }

  BitVector operator*(const BitVector& x) const {
    if (x.size() != cols_) {
      throw InputError("matrix-vector length mismatch: " + std::to_string(cols_) + " vs " + std::to_string(x.size()));
    }
    BitVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r) y.set(r, dot(rows_[r], x));
    return y;
  }

  friend BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols_ != rhs.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t r = 0; r < lhs.rows(); ++r) lhs.rows_[r] ^= rhs.rows_[r];
    return lhs;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r != 0) s += '\n';
      s += rows_[r].to_string();
    }
    return s;
  }

 private:
  const BitVector& row_at(std::size_t r) const {
    check_row(r);
    return rows_[r];
  }
  void check_row(std::size_t r) const {
    if (r >= rows_.size()) throw InputError("row index " + std::to_string(r) + " out of range");
  }

  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Solutions of M x = b: `particular` plus the span of `kernel_basis`.
struct AffineSolutionSet {
  BitVector particular;
  std::vector<BitVector> kernel_basis;

  std::size_t dimension() const noexcept { return kernel_basis.size(); }
  friend bool operator==(const AffineSolutionSet&, const AffineSolutionSet&) = default;
};

/// Reduced row echelon form of a matrix together with the row operations that
/// produced it, so that many right-hand sides can be solved against one
/// elimination.
///
/// Pivot rule: columns are processed left to right and the pivot is the first
/// not-yet-used row holding a 1 in that column. Since the reduced form is
/// unique, the kernel basis (one vector per free column, ascending) and the
/// particular solution (free variables zero) do not depend on row order.
class RowReduction {
 public:
  explicit RowReduction(const BitMatrix& m)
      : rows_(m.rows()), cols_(m.cols()), reduced_(m), transform_(BitMatrix::identity(m.rows())) {
    std::vector<BitVector> red(rows_), ops(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      red[r] = m.row(r);
      ops[r] = transform_.row(r);
    }
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
      std::size_t pivot = next;
      while (pivot < rows_ && !red[pivot].test(c)) ++pivot;
      if (pivot == rows_) continue;
      std::swap(red[pivot], red[next]);
      std::swap(ops[pivot], ops[next]);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r != next && red[r].test(c)) {
          red[r] ^= red[next];
          ops[r] ^= ops[next];
        }
      }
      pivot_cols_.push_back(c);
      ++next;
    }
    reduced_ = BitMatrix::from_rows(std::move(red));
    if (rows_ == 0) reduced_ = BitMatrix(0, cols_);
    transform_ = BitMatrix::from_rows(std::move(ops));
  }

  std::size_t rank() const noexcept { return pivot_cols_.size(); }
  std::size_t nullity() const noexcept { return cols_ - rank(); }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivot_cols_; }
  const BitMatrix& reduced() const noexcept { return reduced_; }

  std::vector<BitVector> kernel_basis() const {
    std::vector<BitVector> basis;
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_cols_) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      BitVector v(cols_);
      v.set(f);
      for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
        if (reduced_.test(i, f)) v.set(pivot_cols_[i]);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Particular solution with free variables zero, or nullopt if inconsistent.
  std::optional<BitVector> particular(const BitVector& b) const {
    if (b.size() != rows_) {
      throw InputError("right-hand side length " + std::to_string(b.size()) + " does not match " +
                       std::to_string(rows_) + " rows");
    }
    const BitVector reduced_b = transform_ * b;
    for (std::size_t r = rank(); r < rows_; ++r) {
      if (reduced_b.test(r)) return std::nullopt;
    }
    BitVector x(cols_);
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
      if (reduced_b.test(i)) x.set(pivot_cols_[i]);
    }
    return x;
  }

  std::optional<AffineSolutionSet> solve(const BitVector& b) const {
    auto p = particular(b);
    if (!p) return std::nullopt;
    return AffineSolutionSet{std::move(*p), kernel_basis()};
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  BitMatrix reduced_;
  BitMatrix transform_;
  std::vector<std::size_t> pivot_cols_;
};

inline std::size_t rank(const BitMatrix& m) { return RowReduction(m).rank(); }

inline std::vector<BitVector> kernel_basis(const BitMatrix& m) { return RowReduction(m).kernel_basis(); }

inline std::optional<AffineSolutionSet> solve_linear(const BitMatrix& m, const BitVector& b) {
  return RowReduction(m).solve(b);
}

inline constexpr std::size_t default_enumeration_cap = std::size_t{1} << 20;

/// All coset members. Member k is particular + sum of kernel_basis[i] over the
/// set bits i of k, for k = 0 .. 2^dim - 1.
inline std::vector<BitVector> enumerate_solutions(const AffineSolutionSet& s,
                                                  std::size_t cap = default_enumeration_cap) {
  const std::size_t k = s.dimension();
  if (k >= 63 || (std::size_t{1} << k) > cap) {
    throw CapacityError("solution set has 2^" + std::to_string(k) + " members, exceeding cap " +
                        std::to_string(cap));
  }
  const std::size_t count = std::size_t{1} << k;
  std::vector<BitVector> out;
  out.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    BitVector v = s.particular;
    for (std::size_t i = 0; i < k; ++i) {
      if ((m >> i) & 1u) v ^= s.kernel_basis[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lights_out

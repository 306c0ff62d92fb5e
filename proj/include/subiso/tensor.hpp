#ifndef SUBISO_TENSOR_HPP
#define SUBISO_TENSOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "subiso/bits.hpp"
#include "subiso/common.hpp"

namespace subiso {

/// Order-q boolean tensor with side n, bit-packed. The last two axes are
/// flattened into contiguous n*n-bit "planes" so the inner loops of the
/// k-wise product, the pointwise ANDs and the validity masks all run on
/// 64-entry words. axis_labels optionally name each axis with a pattern
/// vertex (configuration indexing).
class BoolTensor {
public:
    BoolTensor() = default;
    BoolTensor(int order, int side, std::vector<Vertex> axis_labels = {});

    int order() const { return order_; }
    int side() const { return side_; }
    const std::vector<Vertex>& axis_labels() const { return labels_; }
    void set_axis_labels(std::vector<Vertex> labels);

    std::size_t entry_count() const;
    std::size_t plane_count() const { return plane_count_; }
    std::size_t plane_words() const { return plane_words_; }
    std::uint64_t* plane(std::size_t p) { return words_.data() + p * plane_words_; }
    const std::uint64_t* plane(std::size_t p) const {
        return words_.data() + p * plane_words_;
    }

    bool get(std::span<const int> idx) const;
    void set(std::span<const int> idx, bool v);
    bool get(std::initializer_list<int> idx) const {
        return get(std::span<const int>(idx.begin(), idx.size()));
    }
    void set(std::initializer_list<int> idx, bool v) {
        set(std::span<const int>(idx.begin(), idx.size()), v);
    }

    bool any() const;
    void fill_all(bool v);

    void and_with(const BoolTensor& o);
    void or_with(const BoolTensor& o);

    /// Result axis t is this tensor's axis order[t]; axis labels follow.
    BoolTensor reordered(const std::vector<int>& order) const;
    /// Permute axes so the labels equal `target` (must be a permutation of
    /// the current labels).
    BoolTensor reordered_to_labels(const std::vector<Vertex>& target) const;

    bool operator==(const BoolTensor& o) const;

private:
    BoolTensor reorder_keep_last(const std::vector<int>& order) const;
    BoolTensor swap_last_two() const;

    int order_ = 0;
    int side_ = 0;
    int lead_count_ = 0;
    std::size_t plane_count_ = 0;
    std::size_t plane_bits_ = 0;
    std::size_t plane_words_ = 0;
    std::vector<Vertex> labels_;
    std::vector<std::uint64_t> words_;
};

/// Boolean k-wise matrix product: given q tensors of order q and side n,
/// out[i1..iq] = OR over l of A1[l,i2..iq] AND A2[i1,l,i3..iq] AND ...
/// For q=2 this is boolean matrix multiplication.
BoolTensor kwise_product_bool(const std::vector<BoolTensor>& tensors);

// ---------------------------------------------------------------------------
// Laurent polynomials with integer coefficients.

struct Poly {
    std::int64_t lo = 0;              // exponent of coeffs[0]
    std::vector<std::int64_t> coeffs; // empty means the zero polynomial

    static Poly zero() { return {}; }
    static Poly monomial(std::int64_t exponent, std::int64_t c = 1);
    bool is_zero() const;
    std::int64_t coeff(std::int64_t exponent) const;
    std::int64_t min_exp() const;
    std::int64_t max_exp() const;
    void trim();
    bool operator==(const Poly& o) const;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

/// Order-q tensor of integer-coefficient Laurent polynomials. Entry storage
/// is row-major and scalar; these run at desk scale only.
class PolyTensor {
public:
    PolyTensor() = default;
    PolyTensor(int order, int side, std::vector<Vertex> axis_labels = {});

    int order() const { return order_; }
    int side() const { return side_; }
    const std::vector<Vertex>& axis_labels() const { return labels_; }

    Poly& at(std::span<const int> idx);
    const Poly& at(std::span<const int> idx) const;
    Poly& at(std::initializer_list<int> idx) {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }
    const Poly& at(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }

    std::size_t entry_count() const { return entries_.size(); }
    const std::vector<Poly>& entries() const { return entries_; }
    std::vector<Poly>& entries() { return entries_; }

private:
    int order_ = 0;
    int side_ = 0;
    std::vector<Vertex> labels_;
    std::vector<Poly> entries_;
};

/// Exact-integer k-wise matrix product of polynomial tensors. Inputs must be
/// degree-bounded by D in both directions; the output degree is at most q*D.
PolyTensor kwise_product_poly(const std::vector<PolyTensor>& tensors, std::int64_t degree_bound);

// ---------------------------------------------------------------------------
// Finitely supported boolean functions over the integers (weight sequences).

struct WeightSeq {
    std::int64_t offset = 0; // weight of bit 0
    Bits bits;

    static WeightSeq empty() { return {}; }
    static WeightSeq singleton(std::int64_t w);
    static WeightSeq window(std::int64_t lo, std::int64_t hi); // all-false window

    bool is_empty() const { return !bits.any(); }
    bool contains(std::int64_t w) const;
    void add(std::int64_t w); // must lie inside the window
    void or_merge(const WeightSeq& o);
    WeightSeq shifted(std::int64_t d) const;
    /// Drop leading/trailing false bits; empty support collapses to empty().
    WeightSeq trimmed() const;
    std::vector<std::int64_t> support() const;
    bool operator==(const WeightSeq& o) const;
};

/// (f * g)(x) = OR over z of f(z) AND g(x-z); support is the sumset.
WeightSeq bool_convolution(const WeightSeq& f, const WeightSeq& g);

/// Order-q tensor whose entries are weight sequences: the boolean-semiring
/// view of a Laurent polynomial of 0/1 tensors, stored entrywise.
class WeightSeqTensor {
public:
    WeightSeqTensor() = default;
    WeightSeqTensor(int order, int side, std::vector<Vertex> axis_labels = {});

    int order() const { return order_; }
    int side() const { return side_; }
    const std::vector<Vertex>& axis_labels() const { return labels_; }

    WeightSeq& at(std::span<const int> idx);
    const WeightSeq& at(std::span<const int> idx) const;
    std::vector<WeightSeq>& entries() { return entries_; }
    const std::vector<WeightSeq>& entries() const { return entries_; }

private:
    int order_ = 0;
    int side_ = 0;
    std::vector<Vertex> labels_;
    std::vector<WeightSeq> entries_;
};

/// Boolean-semiring k-wise product of weight-sequence tensors: coefficient
/// OR replaces sum, entry AND-convolution replaces multiplication. This is
/// the weighted solvers' workhorse.
WeightSeqTensor kwise_product_poly_bool(const std::vector<WeightSeqTensor>& tensors);

// ---------------------------------------------------------------------------
// Matrices. Rectangular shapes are first-class: the pathwidth solvers
// multiply n x n by n x n^(p-1) blocks.

enum class MMBackend { naive, blocked };

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t row_words() const { return row_words_; }
    std::uint64_t* row(int r) { return words_.data() + std::size_t(r) * row_words_; }
    const std::uint64_t* row(int r) const {
        return words_.data() + std::size_t(r) * row_words_;
    }
    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v) {
        if (v)
            row(r)[c >> 6] |= std::uint64_t(1) << (c & 63);
        else
            row(r)[c >> 6] &= ~(std::uint64_t(1) << (c & 63));
    }
    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> words_;
};

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::int64_t> v;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), v(std::size_t(r) * c, 0) {}
    std::int64_t& at(int r, int c) { return v[std::size_t(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return v[std::size_t(r) * cols + c]; }
    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && v == o.v;
    }
};

IntMatrix matmul_int(const IntMatrix& a, const IntMatrix& b, MMBackend backend);
BitMatrix matmul_bool(const BitMatrix& a, const BitMatrix& b, MMBackend backend);

/// Rectangular product of weight-sequence matrices in the boolean semiring:
/// out[i][j] = OR over l of conv(a[i][l], b[l][j]).
struct WeightSeqMatrix {
    int rows = 0, cols = 0;
    std::vector<WeightSeq> v;

    WeightSeqMatrix() = default;
    WeightSeqMatrix(int r, int c) : rows(r), cols(c), v(std::size_t(r) * c) {}
    WeightSeq& at(int r, int c) { return v[std::size_t(r) * cols + c]; }
    const WeightSeq& at(int r, int c) const { return v[std::size_t(r) * cols + c]; }
};

WeightSeqMatrix matmul_poly_bool(const WeightSeqMatrix& a, const WeightSeqMatrix& b);

} // namespace subiso

#endif

#ifndef MORSEGRAD_F2_MATRIX_HPP
#define MORSEGRAD_F2_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "morsegrad/bitvector.hpp"

namespace morsegrad {

// Matrix over the two-element field stored as bit-packed rows. Row reduction
// is XOR of whole rows; the first nonzero entry of a row is always taken as
// the pivot, so every computation here is deterministic.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static F2Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return data_[r].test(c); }
    void set(int r, int c, bool v = true) { data_[r].set(c, v); }

    BitVector& row(int r) { return data_[r]; }
    const BitVector& row(int r) const { return data_[r]; }

    F2Matrix transposed() const;
    F2Matrix operator*(const F2Matrix& rhs) const;
    bool operator==(const F2Matrix& other) const = default;

    bool is_zero() const;
    int rank() const;

    // Basis of the null space, as vectors of length cols().
    std::vector<BitVector> kernel_basis() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitVector> data_;
};

// Incremental Gaussian elimination that remembers, for every inserted vector,
// a companion "tag" vector and keeps tags consistent under row operations.
// Two uses:
//   - kernel computation: insert columns tagged with unit vectors; when a
//     column reduces to zero the returned tag is a kernel element;
//   - expressing a vector in a chosen spanning set: insert the spanning
//     vectors with their tags, then call express().
class TrackedEchelon {
public:
    TrackedEchelon(int width, int tag_width) : width_(width), tag_width_(tag_width) {}

    int rank() const { return int(rows_.size()); }
    int width() const { return width_; }
    int tag_width() const { return tag_width_; }

    // Reduces (v, tag) against the stored rows. If the reduced v is nonzero it
    // is stored and nullopt is returned; otherwise the reduced tag (a linear
    // combination certificate) is returned.
    std::optional<BitVector> insert(BitVector v, BitVector tag);

    // If v lies in the span of the inserted vectors, returns the XOR of the
    // tags of the combination that produces it; otherwise nullopt.
    std::optional<BitVector> express(BitVector v) const;

    bool in_span(const BitVector& v) const { return express(v).has_value(); }

private:
    struct Row {
        int pivot;
        BitVector vec;
        BitVector tag;
    };
    int width_, tag_width_;
    std::vector<Row> rows_; // pivots strictly increasing
};

} // namespace morsegrad

#endif

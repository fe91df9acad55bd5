#include "morsegrad/f2_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsegrad {

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c : data_[r].set_bits()) t.set(c, r);
    return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix: shape mismatch in product");
    F2Matrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k : data_[r].set_bits()) out.data_[r].xor_with(rhs.data_[k]);
    return out;
}

bool F2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BitVector& v) { return v.none(); });
}

int F2Matrix::rank() const {
    std::vector<BitVector> rows = data_;
    std::vector<std::pair<int, int>> pivots; // (column, row index)
    int rank = 0;
    for (int r = 0; r < rows_; ++r) {
        BitVector& v = rows[r];
        for (auto [pc, pr] : pivots)
            if (v.test(pc)) v.xor_with(rows[pr]);
        int p = v.lowest_set();
        if (p >= 0) {
            pivots.emplace_back(p, r);
            ++rank;
        }
    }
    return rank;
}

std::vector<BitVector> F2Matrix::kernel_basis() const {
    TrackedEchelon ech(rows_, cols_);
    std::vector<BitVector> kernel;
    F2Matrix t = transposed(); // columns of this as vectors
    for (int c = 0; c < cols_; ++c) {
        BitVector tag(cols_);
        tag.set(c);
        if (auto combo = ech.insert(t.row(c), std::move(tag))) kernel.push_back(std::move(*combo));
    }
    return kernel;
}

std::optional<BitVector> TrackedEchelon::insert(BitVector v, BitVector tag) {
    for (const Row& row : rows_) {
        if (v.test(row.pivot)) {
            v.xor_with(row.vec);
            tag.xor_with(row.tag);
        }
    }
    int p = v.lowest_set();
    if (p < 0) return tag;
    // keep pivots sorted so reduction passes stay one-directional
    Row r{p, std::move(v), std::move(tag)};
    auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                               [](const Row& a, int piv) { return a.pivot < piv; });
    rows_.insert(it, std::move(r));
    return std::nullopt;
}

std::optional<BitVector> TrackedEchelon::express(BitVector v) const {
    BitVector tag(tag_width_);
    for (const Row& row : rows_) {
        if (v.test(row.pivot)) {
            v.xor_with(row.vec);
            tag.xor_with(row.tag);
        }
    }
    if (v.any()) return std::nullopt;
    return tag;
}

} // namespace morsegrad

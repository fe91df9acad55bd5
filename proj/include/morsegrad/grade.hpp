#ifndef MORSEGRAD_GRADE_HPP
#define MORSEGRAD_GRADE_HPP

#include <string>
#include <vector>

namespace morsegrad {

// A filtration grade: n non-negative integers under the componentwise order.
using Grade = std::vector<int>;

// u <= v componentwise.
inline bool grade_leq(const Grade& u, const Grade& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

inline Grade grade_join(const Grade& u, const Grade& v) {
    Grade out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] > v[i] ? u[i] : v[i];
    return out;
}

std::string grade_to_string(const Grade& u);

// The evaluation domain for per-grade invariants: per axis, the sorted unique
// coordinate values occurring among cell grades, compressed to consecutive
// integers 0..k_i-1. Downstream computations run over this finite product
// grid; stepping below index 0 on any axis means the empty complex.
class GradeGrid {
public:
    GradeGrid() = default;
    explicit GradeGrid(std::vector<std::vector<int>> axis_values);

    int params() const { return int(axes_.size()); }
    const std::vector<int>& axis(int i) const { return axes_[i]; }
    int axis_size(int i) const { return int(axes_[i].size()); }

    // Number of grid points (product of axis sizes).
    int size() const { return size_; }

    // Row-major linear index of a compressed grade.
    int index(const Grade& compressed) const;
    Grade grade_at(int linear_index) const;

    // Compressed coordinates of an original grade; throws if some coordinate
    // is not an axis value.
    Grade compress(const Grade& original) const;
    Grade decompress(const Grade& compressed) const;

    // All grid points in row-major order (compressed coordinates).
    std::vector<Grade> all_grades() const;

private:
    std::vector<std::vector<int>> axes_;
    std::vector<int> strides_;
    int size_ = 0;
};

} // namespace morsegrad

#endif

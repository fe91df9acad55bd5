#include "morsegrad/grade.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsegrad {

std::string grade_to_string(const Grade& u) {
    std::string s = "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(u[i]);
    }
    s += ")";
    return s;
}

GradeGrid::GradeGrid(std::vector<std::vector<int>> axis_values) : axes_(std::move(axis_values)) {
    strides_.assign(axes_.size(), 1);
    size_ = axes_.empty() ? 0 : 1;
    for (int i = int(axes_.size()) - 1; i >= 0; --i) {
        if (axes_[i].empty()) throw std::invalid_argument("GradeGrid: empty axis");
        if (!std::is_sorted(axes_[i].begin(), axes_[i].end()))
            throw std::invalid_argument("GradeGrid: axis values must be sorted");
        strides_[i] = (i + 1 < int(axes_.size())) ? strides_[i + 1] * int(axes_[i + 1].size()) : 1;
        size_ *= int(axes_[i].size());
    }
}

int GradeGrid::index(const Grade& compressed) const {
    int idx = 0;
    for (int i = 0; i < params(); ++i) idx += compressed[i] * strides_[i];
    return idx;
}

Grade GradeGrid::grade_at(int linear_index) const {
    Grade g(params());
    for (int i = 0; i < params(); ++i) {
        g[i] = linear_index / strides_[i];
        linear_index %= strides_[i];
    }
    return g;
}

Grade GradeGrid::compress(const Grade& original) const {
    Grade g(params());
    for (int i = 0; i < params(); ++i) {
        auto it = std::lower_bound(axes_[i].begin(), axes_[i].end(), original[i]);
        if (it == axes_[i].end() || *it != original[i])
            throw std::invalid_argument("GradeGrid: coordinate " + std::to_string(original[i]) +
                                        " not on axis " + std::to_string(i));
        g[i] = int(it - axes_[i].begin());
    }
    return g;
}

Grade GradeGrid::decompress(const Grade& compressed) const {
    Grade g(params());
    for (int i = 0; i < params(); ++i) g[i] = axes_[i][compressed[i]];
    return g;
}

std::vector<Grade> GradeGrid::all_grades() const {
    std::vector<Grade> out;
    out.reserve(size_);
    for (int i = 0; i < size_; ++i) out.push_back(grade_at(i));
    return out;
}

} // namespace morsegrad

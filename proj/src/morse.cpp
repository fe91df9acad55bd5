#include "morsegrad/morse.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsegrad {

SeparatrixCalculator::SeparatrixCalculator(const SimplicialComplex& K, const DiscreteGradient& V)
    : K_(K), V_(V) {
    critical_by_dim_.resize(K.dimension() + 2);
    critical_rank_.assign(K.num_cells(), -1);
    for (CellId c = 0; c < K.num_cells(); ++c) {
        if (V.is_critical(c)) {
            critical_rank_[c] = int(critical_by_dim_[K.cell_dim(c)].size());
            critical_by_dim_[K.cell_dim(c)].push_back(c);
        }
    }
}

// Parity vector of V-paths from `cell` to each critical cell of the same
// dimension. Iterative post-order over the reversed gradient DAG.
const BitVector& SeparatrixCalculator::flow_parities(CellId cell) {
    const int q = K_.cell_dim(cell);
    const int width = int(critical_by_dim_[q].size());

    std::vector<CellId> stack{cell};
    while (!stack.empty()) {
        CellId c = stack.back();
        if (flow_memo_.count(c)) {
            stack.pop_back();
            continue;
        }
        if (V_.is_critical(c)) {
            BitVector v(width);
            v.set(critical_rank_[c]);
            flow_memo_.emplace(c, std::move(v));
            stack.pop_back();
            continue;
        }
        CellId tau = V_.partner[c];
        if (K_.cell_dim(tau) != q + 1) { // matched downward: no path continues
            flow_memo_.emplace(c, BitVector(width));
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (CellId f : K_.cell_facets(tau)) {
            if (f != c && !flow_memo_.count(f)) {
                stack.push_back(f);
                ready = false;
            }
        }
        if (!ready) continue;
        BitVector v(width);
        for (CellId f : K_.cell_facets(tau))
            if (f != c) v.xor_with(flow_memo_.at(f));
        flow_memo_.emplace(c, std::move(v));
        stack.pop_back();
    }
    return flow_memo_.at(cell);
}

const BitVector& SeparatrixCalculator::boundary_parities(CellId t) {
    auto it = boundary_memo_.find(t);
    if (it != boundary_memo_.end()) return it->second;
    if (!V_.is_critical(t)) throw std::invalid_argument("boundary_parities: cell is not critical");
    const int q = K_.cell_dim(t);
    BitVector out(q > 0 ? int(critical_by_dim_[q - 1].size()) : 0);
    for (CellId f : K_.cell_facets(t)) out.xor_with(flow_parities(f));
    return boundary_memo_.emplace(t, std::move(out)).first->second;
}

int separatrix_parity(const SimplicialComplex& K, const DiscreteGradient& V, CellId t, CellId s) {
    if (K.cell_dim(t) != K.cell_dim(s) + 1)
        throw std::invalid_argument("separatrix_parity: dimension mismatch");
    if (!V.is_critical(t) || !V.is_critical(s))
        throw std::invalid_argument("separatrix_parity: both cells must be critical");
    SeparatrixCalculator calc(K, V);
    int rank = -1;
    const auto& level = calc.critical_of_dim(K.cell_dim(s));
    for (int i = 0; i < int(level.size()); ++i)
        if (level[i] == s) rank = i;
    return calc.boundary_parities(t).test(rank) ? 1 : 0;
}

MorseComplex build_morse_complex(const Filtration& F, const DiscreteGradient& V) {
    if (auto verdict = validate_gradient(F.complex, V); !verdict.valid)
        throw std::invalid_argument("build_morse_complex: invalid gradient: " + verdict.message);
    if (auto verdict = check_consistency(F, V); !verdict.consistent)
        throw std::invalid_argument("build_morse_complex: gradient not consistent with filtration");

    MorseComplex M;
    M.params = F.params;
    std::vector<CellId> criticals = V.critical_cells(); // already in (dim, lex) order
    std::vector<int> morse_id(F.complex.num_cells(), -1);
    for (int i = 0; i < int(criticals.size()); ++i) morse_id[criticals[i]] = i;

    SeparatrixCalculator calc(F.complex, V);
    std::vector<int> dims(criticals.size());
    std::vector<std::vector<CellId>> facet_lists(criticals.size());
    for (int i = 0; i < int(criticals.size()); ++i) {
        CellId t = criticals[i];
        dims[i] = F.complex.cell_dim(t);
        M.grades.push_back(F.grades[t]);
        M.source.push_back(t);
        if (dims[i] == 0) continue;
        const BitVector& parity = calc.boundary_parities(t);
        const auto& level = calc.critical_of_dim(dims[i] - 1);
        for (int r : parity.set_bits()) facet_lists[i].push_back(morse_id[level[r]]);
    }
    M.complex = LefschetzComplex(std::move(dims), std::move(facet_lists));

    if (auto bad = M.complex.incidence_square_violation())
        throw std::logic_error("build_morse_complex: kappa' does not square to zero");
    for (CellId c = 0; c < M.complex.num_cells(); ++c)
        for (CellId f : M.complex.cell_facets(c))
            if (!grade_leq(M.grades[f], M.grades[c]))
                throw std::logic_error("build_morse_complex: kappa' not monotone in the grades");
    return M;
}

int MorseNumbers::count(const Grade& u, int q) const {
    auto it = per_grade.find(u);
    if (it == per_grade.end() || q < 0 || q >= int(it->second.size())) return 0;
    return it->second[q];
}

namespace {

MorseNumbers tally(const std::vector<Grade>& grades, const std::vector<int>& dims, int top_dim) {
    MorseNumbers m;
    m.totals.assign(std::max(top_dim + 1, 0), 0);
    for (std::size_t i = 0; i < grades.size(); ++i) {
        auto& row = m.per_grade[grades[i]];
        if (int(row.size()) <= dims[i]) row.resize(dims[i] + 1, 0);
        ++row[dims[i]];
        ++m.totals[dims[i]];
    }
    return m;
}

} // namespace

MorseNumbers morse_numbers(const MorseComplex& M, const GradeGrid& grid) {
    std::vector<int> dims(M.complex.num_cells());
    for (CellId c = 0; c < M.complex.num_cells(); ++c) {
        dims[c] = M.complex.cell_dim(c);
        grid.compress(M.grades[c]); // validates the grade lies on the grid
    }
    return tally(M.grades, dims, M.complex.dimension());
}

MorseNumbers morse_numbers(const Filtration& F, const DiscreteGradient& V) {
    std::vector<Grade> grades;
    std::vector<int> dims;
    for (CellId c : V.critical_cells()) {
        grades.push_back(F.grades[c]);
        dims.push_back(F.complex.cell_dim(c));
    }
    return tally(grades, dims, F.complex.dimension());
}

} // namespace morsegrad

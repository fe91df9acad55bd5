#ifndef MORSEGRAD_FILTRATION_HPP
#define MORSEGRAD_FILTRATION_HPP

#include <map>
#include <optional>
#include <vector>

#include "morsegrad/complex.hpp"
#include "morsegrad/grade.hpp"
#include "morsegrad/homology.hpp"

namespace morsegrad {

// Values of the filtering function on the vertices, one n-grade per vertex.
struct VertexFunction {
    int params = 1;
    std::map<VertexId, Grade> values;
};

// Checks that every component i of f0 is injective on the vertices. Returns
// the first colliding (axis, vertex, vertex) triple, or nullopt if injective.
std::optional<std::tuple<int, VertexId, VertexId>> component_collision(const VertexFunction& f0);

// Replaces each component by its rank among vertex values, breaking equal
// values by vertex id. Order-preserving, componentwise injective afterwards.
// Returns the axes on which at least one collision was resolved.
std::vector<int> tiebreak_components(VertexFunction& f0);

// A one-critical multi-filtration: the complex plus the unique entrance grade
// of every cell. Monotone by construction (extend_max) or by validation
// (explicit grades). Gradient construction is only defined on max-extended
// filtrations, since the primary-simplex partition presumes them.
struct Filtration {
    SimplicialComplex complex;
    std::vector<Grade> grades; // by cell id
    int params = 1;
    bool max_extended = false;

    const Grade& grade(CellId c) const { return grades[c]; }
};

// f_i(tau) = max of f0_i over the vertices of tau. Throws on missing vertex
// values or non-injective components (no silent perturbation).
Filtration extend_max(const SimplicialComplex& K, const VertexFunction& f0);

// Explicit per-cell grades; validated for monotonicity. Accepted by the
// invariants machinery only.
Filtration explicit_filtration(SimplicialComplex K, std::vector<Grade> grades, int params);

CellMask sublevel_mask(const Filtration& F, const Grade& u);
SimplicialComplex sublevel(const Filtration& F, const Grade& u);

// Union of sublevel(F, u - e_i) over all axes; axes where u_i would drop
// below zero contribute the empty complex.
CellMask union_of_predecessors_mask(const Filtration& F, const Grade& u);
SimplicialComplex union_of_predecessors(const Filtration& F, const Grade& u);

// Cells whose grade is exactly u.
std::vector<CellId> level_set(const Filtration& F, const Grade& u);

// All cofaces of s (including s) whose grade is <= grade(s).
std::vector<CellId> lower_star(const Filtration& F, CellId s);

// The unique simplex whose lower star equals the level set of u, when u is in
// the image of the grading; nullopt otherwise. Requires a max-extended
// filtration.
std::optional<CellId> primary_simplex(const Filtration& F, const Grade& u);

// Compressed coordinate grid spanned by the grades of F (see GradeGrid).
GradeGrid grade_grid(const Filtration& F);

// Grades of all cells in compressed grid coordinates.
std::vector<Grade> compressed_grades(const Filtration& F, const GradeGrid& grid);

// Sorted unique original grades that actually occur.
std::vector<Grade> image_grades(const Filtration& F);

SimplicialComplex complex_from_mask(const SimplicialComplex& K, const CellMask& mask);

} // namespace morsegrad

#endif

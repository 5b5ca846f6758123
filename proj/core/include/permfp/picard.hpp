#pragma once

#include "permfp/class_function.hpp"
#include "permfp/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permfp {

// Homology of the Brauer quotient at one p-subgroup class: the degrees with
// nonzero homology, with their dimensions.
struct MarkEntry {
    int class_index;
    std::vector<std::pair<int, int>> support;  // (degree, dim), dim > 0, by degree
};

struct MarksReport {
    PSubgroupClasses classes;
    std::vector<MarkEntry> entries;  // one per class, canonical order

    bool in_lambda;    // one support degree per class, dimension 1 at a Sylow
    bool invertible;   // one support degree per class, dimension 1 everywhere
    std::optional<ClassFunction> lambda;  // support degrees, when in_lambda

    // When a test fails: the first offending class and why.
    int witness_class = -1;
    std::string reason;
};

MarksReport marks(const Complex& x);

bool in_lambda(const Complex& x);
bool invertible(const Complex& x);
std::optional<ClassFunction> lambda_of(const Complex& x);

// Dimension function of an invertible complex.  Throws std::invalid_argument
// if the complex is not invertible, std::logic_error if the result were ever
// to escape the Borel-Smith lattice conditions.
ClassFunction theta(const Complex& x);

// The standard generator attached to a p-subgroup class: for a Sylow
// subgroup the shifted unit, otherwise the two-term complex
// k[G/P] -> k[G/G] given by the augmentation, in degrees 1 and 0.
Complex generator_complex(const GroupPtr& g, int p, const Subgroup& P);

struct CatalogSphere {
    std::string label;
    Complex complex;
};

// Hand-built one-dimensional representation spheres for the groups of order
// at most 4 at p = 2: the sign sphere for C2, the inflated sign sphere and
// the rotation sphere for C4, and the three sign spheres for the Klein four
// group.  Throws std::invalid_argument for any other (group, p).
std::vector<CatalogSphere> sphere_catalog(const GroupPtr& g, int p);

}  // namespace permfp

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "smoothdual/partitions.hpp"

namespace smoothdual {

// A supercuspidal orbit, reduced to the data the variety structure sees: an
// identifier, the size `dim` of the general linear group the cuspidal lives
// on, and the order `torsion` of its group of unramified self-twists. The
// base point is taken with unitary determinant.
struct CuspidalLabel {
    std::string id;
    int dim = 1;
    int torsion = 1;

    friend bool operator==(const CuspidalLabel&, const CuspidalLabel&) = default;
};

// Finite user-chosen set of cuspidal labels with pairwise distinct ids.
class Inventory {
public:
    explicit Inventory(std::vector<CuspidalLabel> labels);

    const std::vector<CuspidalLabel>& labels() const { return labels_; }
    const CuspidalLabel* find(const std::string& id) const;
    const CuspidalLabel& at(const std::string& id) const;  // ValidationError if absent

private:
    std::vector<CuspidalLabel> labels_;
    std::map<std::string, std::size_t> index_;
};

// A cuspidal support type for GL(n): labels with multiplicities m >= 1,
// sorted by id, with sum over entries of dim(c) * m_c equal to n.
struct InertialClass {
    std::vector<std::pair<std::string, int>> entries;
    int n = 0;

    friend bool operator==(const InertialClass&, const InertialClass&) = default;
};

// Index of one component of the extended quotient: a partition of each
// label's multiplicity. Partition tuples stand in for conjugacy classes of
// the product of symmetric groups permuting equal cuspidal factors.
using ComponentIndex = std::map<std::string, Partition>;

// One factor Sym^count C^x attached to (label, part size).
struct ShapeFactor {
    std::string label;
    int part = 1;
    int count = 1;

    friend bool operator==(const ShapeFactor&, const ShapeFactor&) = default;
};

// Product of symmetric powers of C^x describing one component. The cyclic
// factors of the centralizer act trivially, so the part sizes contribute
// nothing beyond grouping.
struct ComponentShape {
    std::vector<ShapeFactor> factors;

    int K() const { return static_cast<int>(factors.size()); }

    friend bool operator==(const ComponentShape&, const ComponentShape&) = default;
};

// All inertial classes over the inventory with total size n, ordered by
// lexicographically decreasing multiplicity vectors (labels in id order).
// Empty when no combination reaches n.
std::vector<InertialClass> inertial_classes(const Inventory& inv, int n);

// The ordinary quotient of the class: factor list of prod_c Sym^{m_c} C^x.
std::vector<std::pair<std::string, int>> ordinary_shape(const InertialClass& cls);

// Shape of the component indexed by a partition tuple: each distinct part
// size t with multiplicity n contributes a Sym^n C^x factor. Factors are
// listed per label in id order, part sizes ascending.
ComponentShape shape_of(const ComponentIndex& index);

// The component catalog of a class: one entry per tuple of partitions, one
// partition of m_c per label c. Entry count is the product of the partition
// numbers p(m_c).
std::vector<std::pair<ComponentIndex, ComponentShape>> component_catalog(const InertialClass& cls);

}  // namespace smoothdual

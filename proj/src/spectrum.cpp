#include "smoothdual/spectrum.hpp"

#include <algorithm>

#include "smoothdual/errors.hpp"

namespace smoothdual {

Inventory::Inventory(std::vector<CuspidalLabel> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("inventory: must contain at least one label");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const CuspidalLabel& label = labels_[i];
        const std::string where = "inventory[" + std::to_string(i) + "]";
        if (label.id.empty()) throw ValidationError(where + ": empty id");
        if (label.dim < 1) throw ValidationError(where + " ('" + label.id + "'): dim must be >= 1");
        if (label.torsion < 1)
            throw ValidationError(where + " ('" + label.id + "'): torsion must be >= 1");
        if (!index_.emplace(label.id, i).second)
            throw ValidationError(where + ": duplicate id '" + label.id + "'");
    }
}

const CuspidalLabel* Inventory::find(const std::string& id) const {
    const auto it = index_.find(id);
    return it == index_.end() ? nullptr : &labels_[it->second];
}

const CuspidalLabel& Inventory::at(const std::string& id) const {
    const CuspidalLabel* label = find(id);
    if (!label) throw ValidationError("unknown label '" + id + "'");
    return *label;
}

namespace {

void assign_multiplicities(const std::vector<const CuspidalLabel*>& labels, std::size_t pos,
                           int remaining, std::vector<std::pair<std::string, int>>& entries,
                           int n, std::vector<InertialClass>& out) {
    if (pos == labels.size()) {
        if (remaining == 0) out.push_back(InertialClass{entries, n});
        return;
    }
    const int dim = labels[pos]->dim;
    for (int m = remaining / dim; m >= 0; --m) {
        if (m > 0) entries.emplace_back(labels[pos]->id, m);
        assign_multiplicities(labels, pos + 1, remaining - m * dim, entries, n, out);
        if (m > 0) entries.pop_back();
    }
}

}  // namespace

std::vector<InertialClass> inertial_classes(const Inventory& inv, int n) {
    if (n < 1) throw ValidationError("inertial_classes: n must be >= 1");
    std::vector<const CuspidalLabel*> sorted;
    sorted.reserve(inv.labels().size());
    for (const CuspidalLabel& label : inv.labels()) sorted.push_back(&label);
    std::sort(sorted.begin(), sorted.end(),
              [](const CuspidalLabel* a, const CuspidalLabel* b) { return a->id < b->id; });

    std::vector<InertialClass> out;
    std::vector<std::pair<std::string, int>> entries;
    assign_multiplicities(sorted, 0, n, entries, n, out);
    return out;
}

std::vector<std::pair<std::string, int>> ordinary_shape(const InertialClass& cls) {
    return cls.entries;
}

ComponentShape shape_of(const ComponentIndex& index) {
    ComponentShape shape;
    for (const auto& [label, partition] : index)
        for (const auto& [part, count] : part_multiplicities(partition))
            shape.factors.push_back(ShapeFactor{label, part, count});
    return shape;
}

std::vector<std::pair<ComponentIndex, ComponentShape>> component_catalog(
    const InertialClass& cls) {
    std::vector<std::vector<Partition>> choices;
    choices.reserve(cls.entries.size());
    for (const auto& [id, mult] : cls.entries) choices.push_back(partitions_of(mult));

    std::vector<std::pair<ComponentIndex, ComponentShape>> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        ComponentIndex index;
        for (std::size_t i = 0; i < choices.size(); ++i)
            index.emplace(cls.entries[i].first, choices[i][pick[i]]);
        out.emplace_back(index, shape_of(index));

        // odometer over partition tuples, first label slowest
        std::size_t i = choices.size();
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (choices.empty()) return out;
    }
}

}  // namespace smoothdual

#include "vortsym/megaideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vortsym {

namespace {

constexpr std::size_t kClosureCap = 4096;

std::string child_label(const std::string& core, const std::string& parent) {
    if (parent == "g") {
        return core;
    }
    std::string out = core;
    const auto pos = out.find('g');
    // "g'" of a seed becomes "nilradical'" etc.; named ops get "(parent)".
    if (pos == 0 && (out.size() == 1 || out[1] == '\'' || out[1] == '^')) {
        return parent + out.substr(1);
    }
    return out + "(" + parent + ")";
}

void collect_seeds(const LieAlgebra& ambient, const SubalgebraView* view,
                   const std::string& parent_label, int depth,
                   std::vector<LabeledSubspace>& seeds, std::set<Subspace>& recursed) {
    const LieAlgebra& g = view ? view->algebra : ambient;
    const auto lift = [&](const Subspace& local) {
        return view ? view->to_ambient(local) : local;
    };
    std::vector<LabeledSubspace> local;

    const SeriesReport der = derived_series(g);
    for (std::size_t k = 1; k < der.terms.size(); ++k) {
        local.push_back({child_label("g" + std::string(k, '\''), parent_label),
                         lift(der.terms[k])});
    }
    const SeriesReport lcs = lower_central_series(g);
    for (std::size_t k = 1; k < lcs.terms.size(); ++k) {
        local.push_back({child_label("g^" + std::to_string(k + 1), parent_label),
                         lift(lcs.terms[k])});
    }
    const SeriesReport ucs = upper_central_series(g);
    for (std::size_t k = 1; k < ucs.terms.size(); ++k) {
        local.push_back({child_label(k == 1 ? std::string("center")
                                            : "z" + std::to_string(k),
                                     parent_label),
                         lift(ucs.terms[k])});
    }
    local.push_back({child_label("radical", parent_label), lift(radical(g))});
    local.push_back({child_label("nilradical", parent_label), lift(nilradical(g))});

    for (const LabeledSubspace& s : local) {
        seeds.push_back(s);
        if (depth <= 1 || s.space.is_zero() || s.space.dim() == ambient.dim()) {
            continue;
        }
        if (!recursed.insert(s.space).second) {
            continue;
        }
        // Megaideals of megaideals: rerun the constructions on the seed
        // viewed as an algebra.
        const SubalgebraView sub = restrict_to(ambient, s.space);
        collect_seeds(ambient, &sub, s.label, depth - 1, seeds, recursed);
    }
}

}  // namespace

MegaidealLattice megaideal_closure(const LieAlgebra& g, const MegaidealOptions& options) {
    MegaidealLattice lattice;
    lattice.generators.push_back({"0", g.zero_space()});
    lattice.generators.push_back({"g", g.full_space()});
    std::set<Subspace> recursed;
    collect_seeds(g, nullptr, "g", options.recursion_depth, lattice.generators, recursed);

    std::set<Subspace> members;
    for (const LabeledSubspace& s : lattice.generators) {
        members.insert(s.space);
    }

    std::vector<Subspace> worklist(members.begin(), members.end());
    while (!worklist.empty()) {
        std::vector<Subspace> fresh;
        const std::vector<Subspace> snapshot(members.begin(), members.end());
        for (const Subspace& a : worklist) {
            for (const Subspace& b : snapshot) {
                for (const Subspace& candidate :
                     {sum(a, b), intersect(a, b), g.bracket(a, b)}) {
                    if (members.insert(candidate).second) {
                        fresh.push_back(candidate);
                    }
                }
            }
        }
        if (members.size() > kClosureCap) {
            throw std::logic_error("megaideal closure: member cap exceeded");
        }
        worklist = std::move(fresh);
    }

    lattice.closure.assign(members.begin(), members.end());
    std::sort(lattice.closure.begin(), lattice.closure.end(),
              [](const Subspace& a, const Subspace& b) { return a < b; });

    lattice.member_labels.resize(lattice.closure.size());
    for (std::size_t i = 0; i < lattice.closure.size(); ++i) {
        for (const LabeledSubspace& s : lattice.generators) {
            if (s.space == lattice.closure[i]) {
                lattice.member_labels[i].push_back(s.label);
            }
        }
    }
    for (std::size_t i = 0; i < lattice.closure.size(); ++i) {
        for (std::size_t j = 0; j < lattice.closure.size(); ++j) {
            if (i != j && lattice.closure[i].dim() < lattice.closure[j].dim() &&
                lattice.closure[j].contains(lattice.closure[i])) {
                lattice.inclusion_order.emplace_back(i, j);
            }
        }
    }
    return lattice;
}

bool closure_is_fixed_point(const LieAlgebra& g, const MegaidealLattice& lattice) {
    const std::set<Subspace> members(lattice.closure.begin(), lattice.closure.end());
    for (const Subspace& a : lattice.closure) {
        for (const Subspace& b : lattice.closure) {
            if (!members.count(sum(a, b)) || !members.count(intersect(a, b)) ||
                !members.count(g.bracket(a, b))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace vortsym

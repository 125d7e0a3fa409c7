#pragma once

#include <string>
#include <vector>

#include "matherlift/multipoly.hpp"

namespace matherlift {

/// Finitely generated ideal in an ambient polynomial ring. Zero generators
/// are dropped on construction; all generators must share the ambient
/// variable list.
struct Ideal {
    std::vector<std::string> vars;
    std::vector<MultiPoly> gens;

    Ideal() = default;

    explicit Ideal(std::vector<std::string> ambient, std::vector<MultiPoly> generators = {})
        : vars(std::move(ambient)) {
        for (MultiPoly& g : generators) {
            if (g.is_zero()) continue;
            if (g.vars() != vars)
                throw variable_context_error("ideal generator over wrong variable list");
            gens.push_back(std::move(g));
        }
    }

    static Ideal unit(std::vector<std::string> ambient) {
        MultiPoly one = MultiPoly::constant(ambient, 1);
        return Ideal(std::move(ambient), {one});
    }

    bool is_zero_ideal() const { return gens.empty(); }

    bool operator==(const Ideal&) const = default;
};

} // namespace matherlift

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hellylab/metric.hpp"

namespace hellylab {

// f(y) = d(x, y). Always extremal; the embedding x -> e(x) is isometric
// for the sup metric.
std::vector<Rat> kuratowski(const FiniteMetric& m, int x);

// f*(x) = max_z (d(x,z) - f(z))
std::vector<Rat> star(const FiniteMetric& m, const std::vector<Rat>& f);

Rat sup_dist(const std::vector<Rat>& f, const std::vector<Rat>& g);

struct NotInDelta {
    int x, y;  // witness pair with f(x) + f(y) < d(x,y); x == y means f(x) < 0
};
struct InDeltaNotExtremal {
    std::vector<Rat> dominating;  // strictly below f at one coordinate, still in Delta
    int dropped_coordinate;
};
struct Extremal {};

using FunctionClass = std::variant<NotInDelta, InDeltaNotExtremal, Extremal>;

// Classifies f against Delta(X) and the extremality max-equation
//   f(x) = max_y (d(x,y) - f(y)).
// The 1-Lipschitz property is re-checked explicitly for extremal verdicts;
// a divergence from the max-equation characterization would be a logic
// error and throws.
FunctionClass classify_function(const FiniteMetric& m, const std::vector<Rat>& f);

bool in_delta(const FiniteMetric& m, const std::vector<Rat>& f);
bool is_extremal(const FiniteMetric& m, const std::vector<Rat>& f);

// One step of q(f) = (f + f*) / 2. Requires f in Delta; q(f) <= f pointwise
// and the fixed points are exactly the extremal functions.
std::vector<Rat> q_step(const FiniteMetric& m, const std::vector<Rat>& f);

struct ProjectionResult {
    std::vector<Rat> value;
    bool exact = false;       // reached an extremal fixed point
    int iterations = 0;       // q applications performed
    std::vector<Rat> gap;     // per-coordinate certified bound 2(q^n f - q^{n+1} f); empty when exact
};

// Iterates q up to max_iter steps; exact extremal function when a fixed
// point is reached, otherwise the last iterate with a certified gap.
ProjectionResult project_to_tight_span(const FiniteMetric& m, std::vector<Rat> f, int max_iter = 64);

}  // namespace hellylab

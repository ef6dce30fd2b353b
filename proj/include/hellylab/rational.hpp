#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hellylab {

// Exact rational scalar. All core arithmetic runs on these; no floating
// point enters any computation path.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
std::optional<Rat> parse_rat(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

std::string rat_vector_str(const std::vector<Rat>& v);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace hellylab

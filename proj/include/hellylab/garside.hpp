#pragma once

#include <string>
#include <vector>

#include "hellylab/graph.hpp"

namespace hellylab {

// The braid group B3 = <s1, s2 | s1 s2 s1 = s2 s1 s2> with Garside element
// Delta = s1 s2 s1 and simples the six permutation braids dividing Delta.
// Elements are kept in left greedy normal form Delta^p w_1 ... w_l with
// proper simple factors; equality is normal-form equality.
namespace b3 {

// Simple indices: 0 = e, 1 = s1, 2 = s2, 3 = s1 s2, 4 = s2 s1, 5 = Delta.
inline constexpr int kSimpleCount = 6;

struct Element {
    long delta_power = 0;
    std::vector<int> factors;  // proper simples (neither e nor Delta), left-weighted

    bool operator==(const Element& o) const = default;
    bool operator<(const Element& o) const {
        return std::tie(delta_power, factors) < std::tie(o.delta_power, o.factors);
    }
};

Element identity();
Element simple(int index);
Element delta_power(long p);

Element mult(const Element& a, const Element& b);
Element inverse(const Element& a);

// Left divisibility: a <= b iff a^{-1} b lies in the positive monoid.
bool leq_left(const Element& a, const Element& b);

// inf = delta_power, sup = delta_power + number of factors.
long inf(const Element& e);
long sup(const Element& e);

std::string label(const Element& e);

// Normal form of an arbitrary word over generators; letters '1', '2' for
// s1, s2 (test support).
Element from_positive_word(const std::string& word);

// The set S^{-1} S = {a^{-1} b : a, b simples} without the identity,
// canonical order.
std::vector<Element> symmetric_generators();

}  // namespace b3

struct GarsideBall {
    SimpleGraph graph;
    std::vector<b3::Element> elements;  // vertex -> group element
    std::vector<std::string> labels;    // Garside normal form strings
    std::vector<int> distance;          // word length from the identity
};

// Ball of the given radius around the identity in the Cayley graph of B3
// with respect to S^{-1} S.
GarsideBall garside_b3_ball(int radius, int radius_bound = 3);

}  // namespace hellylab

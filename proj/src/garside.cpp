#include "hellylab/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "hellylab/errors.hpp"

namespace hellylab {
namespace b3 {

namespace {

const std::vector<std::string> kSimpleWords = {"", "1", "2", "12", "21", "121"};
// tau(x) = Delta^{-1} x Delta swaps the two generators.
const int kTau[kSimpleCount] = {0, 2, 1, 4, 3, 5};
// Right complement: simple * complement = Delta.
const int kComplement[kSimpleCount] = {5, 4, 3, 1, 2, 0};

std::string tau_word(const std::string& w) {
    std::string out;
    for (char c : w) out += (c == '1') ? '2' : '1';
    return out;
}

// Equivalence class of a positive braid word under 121 <-> 212.
std::set<std::string> word_class(const std::string& w) {
    std::set<std::string> seen{w};
    std::deque<std::string> queue{w};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (size_t i = 0; i + 3 <= cur.size(); ++i) {
            std::string sub = cur.substr(i, 3);
            std::string rep;
            if (sub == "121")
                rep = "212";
            else if (sub == "212")
                rep = "121";
            else
                continue;
            std::string next = cur.substr(0, i) + rep + cur.substr(i + 3);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

// Left greedy normal form of a positive word: (delta count, proper factors).
std::pair<long, std::vector<int>> normalize_positive(const std::string& word) {
    static std::map<std::string, std::pair<long, std::vector<int>>> cache;
    auto hit = cache.find(word);
    if (hit != cache.end()) return hit->second;

    std::pair<long, std::vector<int>> result{0, {}};
    if (!word.empty()) {
        auto cls = word_class(word);
        // greedy factor: the longest simple left-dividing the word
        int greedy = -1;
        std::string remainder;
        for (int s : {5, 3, 4, 1, 2}) {
            const auto sim_class = word_class(kSimpleWords[s]);
            for (const auto& rep : cls) {
                for (const auto& sw : sim_class)
                    if (rep.compare(0, sw.size(), sw) == 0) {
                        greedy = s;
                        remainder = rep.substr(sw.size());
                        break;
                    }
                if (greedy >= 0) break;
            }
            if (greedy >= 0) break;
        }
        if (greedy < 0) throw std::logic_error("nonempty positive word with no simple divisor");
        auto rest = normalize_positive(remainder);
        if (greedy == 5) {
            result = {rest.first + 1, rest.second};
        } else {
            if (rest.first != 0)
                throw std::logic_error("greedy factor was not maximal");
            result.second.push_back(greedy);
            result.second.insert(result.second.end(), rest.second.begin(), rest.second.end());
        }
    }
    cache.emplace(word, result);
    return result;
}

std::string factors_to_word(const std::vector<int>& factors) {
    std::string w;
    for (int f : factors) w += kSimpleWords[f];
    return w;
}

}  // namespace

Element identity() { return {}; }

Element simple(int index) {
    if (index < 0 || index >= kSimpleCount) throw InputError("bad simple index");
    if (index == 0) return {};
    if (index == 5) return {1, {}};
    return {0, {index}};
}

Element delta_power(long p) { return {p, {}}; }

Element from_positive_word(const std::string& word) {
    for (char c : word)
        if (c != '1' && c != '2') throw InputError("positive braid words use letters 1 and 2");
    auto [p, factors] = normalize_positive(word);
    return {p, factors};
}

Element mult(const Element& a, const Element& b) {
    // Delta^pa Wa Delta^pb Wb = Delta^{pa+pb} tau^{pb}(Wa) Wb
    std::string wa = factors_to_word(a.factors);
    if (b.delta_power % 2 != 0) wa = tau_word(wa);
    auto [q, factors] = normalize_positive(wa + factors_to_word(b.factors));
    return {a.delta_power + b.delta_power + q, factors};
}

Element inverse(const Element& a) {
    // (Delta^p w1..wl)^{-1} = wl^{-1} ... w1^{-1} Delta^{-p}, with
    // w^{-1} = complement(w) Delta^{-1} = Delta^{-1} tau(complement(w)).
    Element out = identity();
    for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it)
        out = mult(out, Element{-1, {kTau[kComplement[*it]]}});
    return mult(out, delta_power(-a.delta_power));
}

bool leq_left(const Element& a, const Element& b) { return mult(inverse(a), b).delta_power >= 0; }

long inf(const Element& e) { return e.delta_power; }
long sup(const Element& e) { return e.delta_power + static_cast<long>(e.factors.size()); }

std::string label(const Element& e) {
    if (e.delta_power == 0 && e.factors.empty()) return "e";
    std::string s;
    if (e.delta_power != 0) s = "D^" + std::to_string(e.delta_power);
    for (int f : e.factors) {
        if (!s.empty()) s += ".";
        s += kSimpleWords[f];
    }
    return s;
}

std::vector<Element> symmetric_generators() {
    std::set<Element> gens;
    for (int a = 0; a < kSimpleCount; ++a)
        for (int b = 0; b < kSimpleCount; ++b) {
            Element g = mult(inverse(simple(a)), simple(b));
            if (g == identity()) continue;
            gens.insert(g);
        }
    return {gens.begin(), gens.end()};
}

}  // namespace b3

GarsideBall garside_b3_ball(int radius, int radius_bound) {
    if (radius < 0) throw InputError("radius must be nonnegative");
    if (radius > radius_bound)
        throw BoundExceeded("Garside ball radius " + std::to_string(radius) + " exceeds bound " +
                            std::to_string(radius_bound));
    auto gens = b3::symmetric_generators();

    GarsideBall ball;
    std::map<b3::Element, int> index;
    std::deque<b3::Element> queue;
    auto add = [&](const b3::Element& e, int dist) {
        ball.elements.push_back(e);
        ball.labels.push_back(b3::label(e));
        ball.distance.push_back(dist);
        index.emplace(e, static_cast<int>(ball.elements.size()) - 1);
    };
    add(b3::identity(), 0);
    queue.push_back(b3::identity());
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        int dv = ball.distance[index[v]];
        if (dv == radius) continue;
        for (const auto& g : gens) {
            auto w = b3::mult(v, g);
            if (!index.count(w)) {
                add(w, dv + 1);
                queue.push_back(w);
            }
        }
    }
    const int n = static_cast<int>(ball.elements.size());
    ball.graph = SimpleGraph(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            b3::Element diff = b3::mult(b3::inverse(ball.elements[i]), ball.elements[j]);
            // adjacent iff Delta^{-1} <= diff <= Delta and diff != e
            if (b3::inf(diff) >= -1 && b3::sup(diff) <= 1) ball.graph.add_edge(i, j);
        }
    return ball;
}

}  // namespace hellylab

#pragma once

#include "bqg/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqg::words {

// A word is a sequence of letters from a totally ordered alphabet.  Letters
// are small non-negative integers; the alphabet size is passed where an
// operation needs it.
using Word = std::vector<int>;

// Lexicographic order with the prefix rule: a proper prefix is smaller than
// the word it prefixes.  This is the order every Lyndon-word operation below
// relies on.
inline bool lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (int a : w) s += static_cast<char>(a < 10 ? '0' + a : 'a' + (a - 10));
    return s;
}

inline Word word_from_string(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c >= '0' && c <= '9') w.push_back(c - '0');
        else if (c >= 'a' && c <= 'z') w.push_back(10 + (c - 'a'));
        else throw std::invalid_argument("word_from_string: bad character");
    }
    return w;
}

// True iff w is strictly smaller than every nontrivial rotation of itself.
inline bool is_lyndon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
    const int n = static_cast<int>(w.size());
    for (int s = 1; s < n; ++s) {
        // compare w with its rotation by s
        for (int i = 0; i < n; ++i) {
            int a = w[i], b = w[(i + s) % n];
            if (a < b) break;
            if (a > b) return false;
            if (i == n - 1) return false;  // equal to a rotation
        }
    }
    return true;
}

// All Lyndon words of length exactly n over {0,..,q-1}, lexicographically
// sorted.  Iterative next-word generation; emits words of length <= n and
// keeps those of length n.
inline std::vector<Word> lyndon_words(int q, int n) {
    if (q < 2) throw std::invalid_argument("lyndon_words: alphabet size must be >= 2");
    if (n < 1) throw std::invalid_argument("lyndon_words: length must be >= 1");
    std::vector<Word> out;
    Word w{0};
    while (true) {
        if (static_cast<int>(w.size()) == n) out.push_back(w);
        // extend periodically to length n
        Word t(n);
        for (int i = 0; i < n; ++i) t[i] = w[i % w.size()];
        while (!t.empty() && t.back() == q - 1) t.pop_back();
        if (t.empty()) break;
        ++t.back();
        w = std::move(t);
    }
    return out;
}

// Number of Lyndon words of length n over q letters, by Mobius inversion of
// sum_{d|n} d * L_q(d) = q^n.
inline Int count_lyndon(int q, int n) {
    if (q < 2 || n < 1) throw std::invalid_argument("count_lyndon: bad arguments");
    auto mobius = [](int m) {
        int mu = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                mu = -mu;
            }
        }
        if (m > 1) mu = -mu;
        return mu;
    };
    Int total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        Int term = 1;
        for (int i = 0; i < n / d; ++i) term *= q;
        total += mu * term;
    }
    return total / n;
}

// Factorization of w into a non-increasing sequence of Lyndon words
// (Duval's algorithm), returned left-to-right as they occur in w.
inline std::vector<Word> cfl_decompose(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cfl_decompose: empty word");
    std::vector<Word> factors;
    const int n = static_cast<int>(w.size());
    int i = 0;
    while (i < n) {
        int j = i + 1, k = i;
        while (j < n && w[k] <= w[j]) {
            if (w[k] < w[j]) k = i; else ++k;
            ++j;
        }
        const int len = j - k;
        while (i <= k) {
            factors.emplace_back(w.begin() + i, w.begin() + i + len);
            i += len;
        }
    }
    return factors;
}

// True iff the factorization of w has no repeated factor, i.e. is strictly
// decreasing left-to-right.
inline bool is_strictly_decreasing(const Word& w) {
    auto f = cfl_decompose(w);
    for (size_t i = 1; i < f.size(); ++i)
        if (f[i - 1] == f[i]) return false;
    return true;
}

// Split a Lyndon word w = r s at its lexicographically smallest proper
// suffix s; both parts are Lyndon.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("standard_factorization: need length >= 2");
    if (!is_lyndon(w)) throw std::invalid_argument("standard_factorization: input not Lyndon");
    const int n = static_cast<int>(w.size());
    int best = 1;
    for (int i = 2; i < n; ++i) {
        if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
            best = i;
    }
    return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

// Multiset over the ordered alphabet, letter -> positive multiplicity.
struct Multiset {
    std::map<int, int> counts;

    int cardinality() const {
        int c = 0;
        for (auto& [a, m] : counts) c += m;
        return c;
    }
    // letters with multiplicity, sorted
    std::vector<int> elements() const {
        std::vector<int> v;
        for (auto& [a, m] : counts)
            for (int i = 0; i < m; ++i) v.push_back(a);
        return v;
    }
};

inline Multiset multiset_of(std::initializer_list<int> letters) {
    Multiset m;
    for (int a : letters) ++m.counts[a];
    return m;
}

// A tuple of Lyndon words, strictly increasing left-to-right.  The word it
// came from is the concatenation of the factors in reverse order.
using LyndonTuple = std::vector<Word>;

inline Word tuple_word(const LyndonTuple& t) {
    Word w;
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

inline int tuple_cardinality(const LyndonTuple& t) {
    int c = 0;
    for (auto& f : t) c += static_cast<int>(f.size());
    return c;
}

// cardinality minus the number of factors; its parity splits tuples into
// even and odd.
inline int lyndon_index(const LyndonTuple& t) {
    return tuple_cardinality(t) - static_cast<int>(t.size());
}

// All arrangements of M whose factorization is strictly decreasing, each
// returned as its increasing tuple.  Enumerates distinct permutations of the
// multiset; fine for the small cardinalities this is used with.
inline std::vector<LyndonTuple> lyndon_tuples(const Multiset& m) {
    if (m.cardinality() < 1) throw std::invalid_argument("lyndon_tuples: empty multiset");
    std::vector<int> letters = m.elements();
    std::vector<LyndonTuple> out;
    do {
        Word w(letters.begin(), letters.end());
        if (!is_strictly_decreasing(w)) continue;
        auto factors = cfl_decompose(w);
        std::reverse(factors.begin(), factors.end());
        out.push_back(std::move(factors));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

// The first factor splits when it is not a single letter and the suffix of
// its standard factorization precedes the second factor (vacuous for a
// one-factor tuple).
inline bool is_splittable(const LyndonTuple& t) {
    if (t.empty()) throw std::invalid_argument("is_splittable: empty tuple");
    if (t[0].size() < 2) return false;
    if (t.size() == 1) return true;
    auto [r, s] = standard_factorization(t[0]);
    return lex_less(s, t[1]);
}

// Parity-flipping involution on the tuples over a multiset: split the first
// factor when splittable, otherwise merge the first two factors.
inline LyndonTuple parity_bijection(const LyndonTuple& t) {
    if (tuple_cardinality(t) < 2)
        throw std::invalid_argument("parity_bijection: cardinality must be >= 2");
    LyndonTuple out;
    if (is_splittable(t)) {
        auto [r, s] = standard_factorization(t[0]);
        out.push_back(std::move(r));
        out.push_back(std::move(s));
        out.insert(out.end(), t.begin() + 1, t.end());
    } else {
        // not splittable with a single factor cannot occur at cardinality >= 2
        Word merged = t[0];
        merged.insert(merged.end(), t[1].begin(), t[1].end());
        out.push_back(std::move(merged));
        out.insert(out.end(), t.begin() + 2, t.end());
    }
    return out;
}

// Number of positions, cyclically within each factor, where a letter from
// b_set is immediately followed by a letter from d_set.
inline int t_count(const LyndonTuple& t, const std::set<int>& b_set, const std::set<int>& d_set) {
    int count = 0;
    for (const Word& f : t) {
        const int n = static_cast<int>(f.size());
        for (int i = 0; i < n; ++i) {
            if (b_set.count(f[i]) && d_set.count(f[(i + 1) % n])) ++count;
        }
    }
    return count;
}

}  // namespace bqg::words

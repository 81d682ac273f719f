#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "adm/errors.hpp"
#include "adm/rational.hpp"

namespace adm {

// Variable tables for the two polynomial rings used throughout.
struct Vars16 {
    static constexpr int N = 16;
    static const std::array<std::string, 16>& names() {
        static const std::array<std::string, 16> n = {"w", "x", "y", "z", "a", "b",
                                                      "c", "d", "e", "f", "g", "h",
                                                      "i", "j", "k", "l"};
        return n;
    }
};

struct VarsXY {
    static constexpr int N = 2;
    static const std::array<std::string, 2>& names() {
        static const std::array<std::string, 2> n = {"x", "y"};
        return n;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
//
// Canonical term order: graded reverse lexicographic over the variable order
// given by V::names() (first name least significant... i.e. w<x<y<z<a<...<l),
// with terms stored and rendered in descending order. This matches renderings
// like "j*w*y*z + k*w*x*y + l*w*x*z" and "x^2 + x + y".
template <class V>
class SparsePoly {
  public:
    static constexpr int N = V::N;
    using Expo = std::array<std::uint8_t, N>;

    struct TermGreater {
        bool operator()(const Expo& a, const Expo& b) const {
            int da = 0, db = 0;
            for (int i = 0; i < N; i++) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da > db;
            // grevlex: scan from the last variable; the term with the smaller
            // exponent at the last difference is the larger term.
            for (int i = N - 1; i >= 0; i--)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        }
    };

    using TermMap = std::map<Expo, Rational, TermGreater>;

    SparsePoly() = default;
    SparsePoly(const Rational& c) {  // NOLINT: implicit scalar embedding
        if (!c.is_zero()) terms_[Expo{}] = c;
    }
    SparsePoly(int v) : SparsePoly(Rational(v)) {}  // NOLINT

    static SparsePoly zero() { return SparsePoly(); }
    static SparsePoly constant(Rational c) {
        SparsePoly p;
        if (!c.is_zero()) p.terms_[Expo{}] = std::move(c);
        return p;
    }
    static SparsePoly one() { return constant(Rational(1)); }
    static SparsePoly var(int i) {
        Expo e{};
        e[i] = 1;
        return monomial(e, Rational(1));
    }
    static SparsePoly monomial(const Expo& e, Rational c) {
        SparsePoly p;
        if (!c.is_zero()) p.terms_[e] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Expo{});
        if (it == terms_.end() || terms_.size() != 1)
            throw PreconditionError("polynomial is not constant: " + render());
        return it->second;
    }

    SparsePoly operator-() const {
        SparsePoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    SparsePoly operator+(const SparsePoly& o) const {
        SparsePoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    SparsePoly operator-(const SparsePoly& o) const {
        SparsePoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    SparsePoly operator*(const SparsePoly& o) const {
        SparsePoly r;
        for (auto& [ea, ca] : terms_)
            for (auto& [eb, cb] : o.terms_) {
                Expo e;
                for (int i = 0; i < N; i++) {
                    int s = ea[i] + eb[i];
                    if (s > 255) throw PreconditionError("exponent overflow");
                    e[i] = static_cast<std::uint8_t>(s);
                }
                r.add_term(e, ca * cb);
            }
        return r;
    }
    SparsePoly operator*(const Rational& c) const {
        SparsePoly r;
        if (c.is_zero()) return r;
        for (auto& [e, cc] : terms_) r.terms_[e] = cc * c;
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly pow(unsigned e) const {
        SparsePoly r = one(), b = *this;
        for (; e; e >>= 1, b = b * b)
            if (e & 1) r = r * b;
        return r;
    }

    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }
    bool operator<(const SparsePoly& o) const {
        auto a = terms_.begin(), b = o.terms_.begin();
        TermGreater gt;
        for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
            if (a->first != b->first) return gt(a->first, b->first);
            if (a->second != b->second) return a->second < b->second;
        }
        return b != o.terms_.end();
    }

    // Evaluate with every variable bound. T needs 0/1 literals, + and *.
    template <class T>
    T eval(const std::array<T, N>& vals) const {
        T acc(0);
        for (auto& [e, c] : terms_) {
            T t = scalar_from<T>(c);
            for (int i = 0; i < N; i++)
                for (int k = 0; k < e[i]; k++) t = t * vals[i];
            acc = acc + t;
        }
        return acc;
    }

    // Substitute each variable by a polynomial of the same ring.
    SparsePoly substitute(const std::array<SparsePoly, N>& subs) const {
        SparsePoly acc;
        for (auto& [e, c] : terms_) {
            SparsePoly t = constant(c);
            for (int i = 0; i < N; i++)
                if (e[i]) t = t * subs[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    // Rename variables: exponent of old variable i moves to perm[i].
    SparsePoly rename(const std::array<int, N>& perm) const {
        SparsePoly r;
        for (auto& [e, c] : terms_) {
            Expo ne{};
            for (int i = 0; i < N; i++) ne[perm[i]] = e[i];
            r.add_term(ne, c);
        }
        return r;
    }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [e, c] : terms_) {
            Rational ac = c;
            if (first) {
                if (c < Rational(0)) {
                    out += "-";
                    ac = -c;
                }
            } else {
                out += c < Rational(0) ? " - " : " + ";
                if (c < Rational(0)) ac = -c;
            }
            std::vector<std::string> parts;
            if (!ac.is_one() || e == Expo{}) parts.push_back(ac.str());
            for (int i : alpha_order()) {
                if (!e[i]) continue;
                std::string p = V::names()[i];
                if (e[i] > 1) p += "^" + std::to_string(int(e[i]));
                parts.push_back(p);
            }
            for (size_t i = 0; i < parts.size(); i++) {
                if (i) out += "*";
                out += parts[i];
            }
            first = false;
        }
        return out;
    }

    static SparsePoly parse(const std::string& s) {
        SparsePoly acc;
        size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && s[pos] == ' ') pos++;
        };
        skip_ws();
        if (pos >= s.size()) throw ValidationError("empty polynomial text");
        bool neg = false;
        if (s[pos] == '-') {
            neg = true;
            pos++;
        } else if (s[pos] == '+') {
            pos++;
        }
        while (true) {
            skip_ws();
            // one term: factors joined by '*'
            Rational coeff(1);
            Expo e{};
            bool any = false;
            while (true) {
                skip_ws();
                if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
                    size_t start = pos;
                    while (pos < s.size() &&
                           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                        pos++;
                    coeff *= Rational::parse(s.substr(start, pos - start));
                    any = true;
                } else {
                    int vi = match_var(s, pos);
                    if (vi < 0) break;
                    int ex = 1;
                    if (pos < s.size() && s[pos] == '^') {
                        pos++;
                        size_t start = pos;
                        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                            pos++;
                        if (start == pos) throw ValidationError("missing exponent");
                        ex = std::stoi(s.substr(start, pos - start));
                    }
                    e[vi] = static_cast<std::uint8_t>(e[vi] + ex);
                    any = true;
                }
                skip_ws();
                if (pos < s.size() && s[pos] == '*') {
                    pos++;
                    continue;
                }
                break;
            }
            if (!any) throw ValidationError("malformed polynomial term near position " +
                                            std::to_string(pos));
            acc.add_term(e, neg ? -coeff : coeff);
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') {
                neg = false;
                pos++;
            } else if (s[pos] == '-') {
                neg = true;
                pos++;
            } else {
                throw ValidationError("unexpected character in polynomial: " +
                                      std::string(1, s[pos]));
            }
        }
        return acc;
    }

  private:
    // Factors inside a monomial are printed in alphabetical name order.
    static const std::array<int, N>& alpha_order() {
        static const std::array<int, N> order = [] {
            std::array<int, N> o{};
            for (int i = 0; i < N; i++) o[i] = i;
            std::sort(o.begin(), o.end(),
                      [](int a, int b) { return V::names()[a] < V::names()[b]; });
            return o;
        }();
        return order;
    }

    template <class T>
    static T scalar_from(const Rational& c) {
        if constexpr (std::is_same_v<T, Rational>) {
            return c;
        } else {
            return T(c);
        }
    }

    static int match_var(const std::string& s, size_t& pos) {
        // Longest-match over variable names (all single letters here, but keep
        // it general).
        int best = -1;
        size_t best_len = 0;
        for (int i = 0; i < N; i++) {
            const std::string& nm = V::names()[i];
            if (nm.size() > best_len && s.compare(pos, nm.size(), nm) == 0) {
                best = i;
                best_len = nm.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }

    void add_term(const Expo& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

using MultiPoly16 = SparsePoly<Vars16>;
using BiPoly = SparsePoly<VarsXY>;

}  // namespace adm

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contmach/rational.hpp"

namespace contmach {

using Natural = std::uint64_t;

/// The one-point set. Its element is the question of discrete spaces.
struct Unit {
    friend bool operator==(Unit, Unit) { return true; }
    friend auto operator<=>(Unit, Unit) = default;
};

/// A countable set of questions or answers.
///
/// Decidable equality is the element type's operator==; `eq` exposes it as a
/// value so that code which only holds an alphabet can compare elements.
/// `fallback` is the distinguished default element (default question for
/// question alphabets, default answer for answer alphabets). Default answers
/// can be simulated by asking the default question and reusing the reply; we
/// keep both for simpler signatures.
template <typename T>
struct Alphabet {
    std::string name;
    std::function<T(Natural)> enumerate;
    T fallback;

    bool eq(const T& a, const T& b) const { return a == b; }
};

/// A name: a total function from questions to answers. Copies share the
/// underlying function, which must be pure.
template <typename Q, typename A>
class NameOracle {
public:
    using Fn = std::function<A(const Q&)>;

    NameOracle() = default;
    explicit NameOracle(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

    A operator()(const Q& q) const { return (*fn_)(q); }

    static NameOracle constant(A value) {
        return NameOracle([value = std::move(value)](const Q&) { return value; });
    }

private:
    std::shared_ptr<const Fn> fn_;
};

/// A finite function encoded as a list of question/answer pairs. size() is the
/// number of entries, not the number of distinct questions.
template <typename Q, typename A>
class FiniteFunction {
public:
    using Entry = std::pair<Q, A>;

    FiniteFunction() = default;
    explicit FiniteFunction(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    void append(Q q, A a) { entries_.emplace_back(std::move(q), std::move(a)); }

    /// Questions in entry order, duplicates kept.
    std::vector<Q> domain() const {
        std::vector<Q> out;
        out.reserve(entries_.size());
        for (const auto& [q, a] : entries_) {
            out.push_back(q);
        }
        return out;
    }

    friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

private:
    std::vector<Entry> entries_;
};

/// First entry whose question equals `q` wins.
template <typename Q, typename A>
std::optional<A> lookup(const FiniteFunction<Q, A>& phi_hat, const Q& q) {
    for (const auto& [question, answer] : phi_hat.entries()) {
        if (question == q) {
            return answer;
        }
    }
    return std::nullopt;
}

template <typename Q, typename A>
bool defined_at(const FiniteFunction<Q, A>& phi_hat, const Q& q) {
    for (const auto& entry : phi_hat.entries()) {
        if (entry.first == q) {
            return true;
        }
    }
    return false;
}

/// The total oracle that answers from `phi_hat` and with `fallback` elsewhere.
template <typename Q, typename A>
NameOracle<Q, A> extend_with_default(FiniteFunction<Q, A> phi_hat, A fallback) {
    return NameOracle<Q, A>([phi_hat = std::move(phi_hat), fallback = std::move(fallback)](const Q& q) {
        if (auto a = lookup(phi_hat, q)) {
            return *a;
        }
        return fallback;
    });
}

/// True iff phi and psi agree on every question of `questions`.
template <typename Q, typename A>
bool restriction_eq(const NameOracle<Q, A>& phi, const NameOracle<Q, A>& psi, const std::vector<Q>& questions) {
    for (const Q& q : questions) {
        if (!(phi(q) == psi(q))) {
            return false;
        }
    }
    return true;
}

template <typename T>
bool contains(const std::vector<T>& list, const T& item) {
    for (const T& x : list) {
        if (x == item) {
            return true;
        }
    }
    return false;
}

/// Inclusion by membership: order and multiplicity are ignored.
template <typename T>
bool sublist(const std::vector<T>& small, const std::vector<T>& large) {
    for (const T& x : small) {
        if (!contains(large, x)) {
            return false;
        }
    }
    return true;
}

/// Elements of `lhs` without a match in `rhs`, order and duplicates preserved.
template <typename T>
std::vector<T> list_diff(const std::vector<T>& lhs, const std::vector<T>& rhs) {
    std::vector<T> out;
    for (const T& x : lhs) {
        if (!contains(rhs, x)) {
            out.push_back(x);
        }
    }
    return out;
}

template <typename T>
void append_all(std::vector<T>& out, const std::vector<T>& items) {
    out.insert(out.end(), items.begin(), items.end());
}

/// Name oracle given by a finite table plus a fallback answer. This is the
/// serializable form used for test fixtures.
template <typename Q, typename A>
struct TableOracle {
    std::string alphabet;
    std::vector<std::pair<Q, A>> table;
    A fallback;

    NameOracle<Q, A> oracle() const { return extend_with_default(FiniteFunction<Q, A>(table), fallback); }
};

// Standard alphabets.

Alphabet<Unit> unit_alphabet();
Alphabet<bool> boolean_alphabet();
Alphabet<Natural> natural_alphabet();
/// {0, ..., size - 1}; enumeration wraps around past the last element.
Alphabet<Natural> finite_alphabet(Natural size);
/// 0, 1, -1, 1/2, -1/2, 2, -2, ... (signed Calkin-Wilf order).
Alphabet<Rational> rational_alphabet(Rational fallback = Rational(0));

/// Index 0 is None, index i + 1 is Some(inner.enumerate(i)).
template <typename T>
Alphabet<std::optional<T>> optional_alphabet(const Alphabet<T>& inner) {
    return Alphabet<std::optional<T>>{
        "opt(" + inner.name + ")",
        [enumerate = inner.enumerate](Natural i) -> std::optional<T> {
            if (i == 0) {
                return std::nullopt;
            }
            return enumerate(i - 1);
        },
        std::nullopt};
}

std::pair<Natural, Natural> cantor_unpair(Natural index);

template <typename T>
Alphabet<std::pair<Natural, T>> indexed_alphabet(const Alphabet<T>& inner) {
    return Alphabet<std::pair<Natural, T>>{
        "N x " + inner.name,
        [enumerate = inner.enumerate](Natural i) {
            auto [n, k] = cantor_unpair(i);
            return std::pair<Natural, T>{n, enumerate(k)};
        },
        {0, inner.fallback}};
}

} // namespace contmach

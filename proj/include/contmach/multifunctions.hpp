#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "contmach/alphabets.hpp"

namespace contmach {

/// A multifunction on a finite source: each point gets a finite (possibly
/// empty) list of eligible values. Points outside the source get none.
template <typename X, typename Y>
class FiniteMultifunction {
public:
    using Row = std::pair<X, std::vector<Y>>;

    FiniteMultifunction() = default;
    explicit FiniteMultifunction(std::vector<Row> rows) : rows_(std::move(rows)) {}

    const std::vector<Row>& rows() const { return rows_; }

    std::vector<X> source() const {
        std::vector<X> out;
        for (const auto& row : rows_) {
            out.push_back(row.first);
        }
        return out;
    }

    const std::vector<Y>& values(const X& x) const {
        static const std::vector<Y> none;
        for (const auto& row : rows_) {
            if (row.first == x) {
                return row.second;
            }
        }
        return none;
    }

    bool defined_at(const X& x) const { return !values(x).empty(); }

    /// Points with at least one eligible value.
    std::vector<X> domain() const {
        std::vector<X> out;
        for (const auto& row : rows_) {
            if (!row.second.empty()) {
                out.push_back(row.first);
            }
        }
        return out;
    }

private:
    std::vector<Row> rows_;
};

template <typename X, typename Y>
using PartialMap = std::function<std::optional<Y>(const X&)>;

/// F tightens G: dom(G) is contained in dom(F), and F(x) is contained in G(x)
/// on dom(G).
template <typename X, typename Y>
bool tightens(const FiniteMultifunction<X, Y>& f, const FiniteMultifunction<X, Y>& g) {
    for (const X& x : g.domain()) {
        if (!f.defined_at(x) || !sublist(f.values(x), g.values(x))) {
            return false;
        }
    }
    return true;
}

/// (F o G)(x) = {z | G(x) is contained in dom(F) and z in F(y) for some y in
/// G(x)}. A single y in G(x) outside dom(F) leaves x undefined.
template <typename X, typename Y, typename Z>
FiniteMultifunction<X, Z> mf_compose(const FiniteMultifunction<Y, Z>& f, const FiniteMultifunction<X, Y>& g) {
    std::vector<typename FiniteMultifunction<X, Z>::Row> rows;
    for (const auto& [x, ys] : g.rows()) {
        std::vector<Z> zs;
        bool guarded = true;
        for (const Y& y : ys) {
            if (!f.defined_at(y)) {
                guarded = false;
                break;
            }
        }
        if (guarded) {
            for (const Y& y : ys) {
                for (const Z& z : f.values(y)) {
                    if (!contains(zs, z)) {
                        zs.push_back(z);
                    }
                }
            }
        }
        rows.emplace_back(x, std::move(zs));
    }
    return FiniteMultifunction<X, Z>(std::move(rows));
}

/// f chooses through F: on every x in dom(F), f(x) is defined and eligible.
template <typename X, typename Y>
bool chooses_through(const PartialMap<X, Y>& f, const FiniteMultifunction<X, Y>& mf) {
    for (const X& x : mf.domain()) {
        const auto y = f(x);
        if (!y || !contains(mf.values(x), *y)) {
            return false;
        }
    }
    return true;
}

/// The single-valued multifunction x -> {f(x)} (empty where f is undefined).
template <typename X, typename Y>
FiniteMultifunction<X, Y> as_multifunction(const PartialMap<X, Y>& f, const std::vector<X>& source) {
    std::vector<typename FiniteMultifunction<X, Y>::Row> rows;
    for (const X& x : source) {
        if (auto y = f(x)) {
            rows.emplace_back(x, std::vector<Y>{*y});
        } else {
            rows.emplace_back(x, std::vector<Y>{});
        }
    }
    return FiniteMultifunction<X, Y>(std::move(rows));
}

} // namespace contmach

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "contmach/alphabets.hpp"
#include "contmach/rational.hpp"

namespace contmach {

using Json = nlohmann::ordered_json;

// Wire encoding of alphabet elements:
//   Rational        "p/q" (canonical, q > 0)
//   bool            true | false
//   Natural         integer
//   Unit            "*"
//   optional<T>     "none" | encoding of T
//   pair<N, T>      [n, encoding of T]
//   vector<T>       array

inline Json encode(const Rational& r) { return r.to_string(); }
inline Json encode(bool b) { return b; }
inline Json encode(Natural n) { return n; }
inline Json encode(Unit) { return "*"; }

template <typename T>
Json encode(const std::optional<T>& value);
template <typename T>
Json encode(const std::pair<Natural, T>& value);
template <typename T>
Json encode(const std::vector<T>& values);

template <typename T>
Json encode(const std::optional<T>& value) {
    if (!value) {
        return "none";
    }
    return encode(*value);
}

template <typename T>
Json encode(const std::pair<Natural, T>& value) {
    return Json::array({value.first, encode(value.second)});
}

template <typename T>
Json encode(const std::vector<T>& values) {
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(encode(v));
    }
    return out;
}

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
struct Decoder;

template <typename T>
T decode(const Json& j) {
    return Decoder<T>::apply(j);
}

template <>
struct Decoder<Rational> {
    static Rational apply(const Json& j) {
        if (j.is_string()) {
            try {
                return Rational::parse(j.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw DecodeError(e.what());
            }
        }
        if (j.is_number_integer()) {
            return Rational(j.get<long>());
        }
        throw DecodeError("expected rational, got " + j.dump());
    }
};

template <>
struct Decoder<bool> {
    static bool apply(const Json& j) {
        if (!j.is_boolean()) {
            throw DecodeError("expected boolean, got " + j.dump());
        }
        return j.get<bool>();
    }
};

template <>
struct Decoder<Natural> {
    static Natural apply(const Json& j) {
        if (!j.is_number_unsigned()) {
            throw DecodeError("expected natural number, got " + j.dump());
        }
        return j.get<Natural>();
    }
};

template <>
struct Decoder<Unit> {
    static Unit apply(const Json& j) {
        if (j != "*") {
            throw DecodeError("expected \"*\", got " + j.dump());
        }
        return {};
    }
};

template <typename T>
struct Decoder<std::optional<T>> {
    static std::optional<T> apply(const Json& j) {
        if (j == "none") {
            return std::nullopt;
        }
        return decode<T>(j);
    }
};

template <typename T>
struct Decoder<std::pair<Natural, T>> {
    static std::pair<Natural, T> apply(const Json& j) {
        if (!j.is_array() || j.size() != 2) {
            throw DecodeError("expected [n, value], got " + j.dump());
        }
        return {decode<Natural>(j[0]), decode<T>(j[1])};
    }
};

template <typename T>
struct Decoder<std::vector<T>> {
    static std::vector<T> apply(const Json& j) {
        if (!j.is_array()) {
            throw DecodeError("expected array, got " + j.dump());
        }
        std::vector<T> out;
        for (const auto& item : j) {
            out.push_back(decode<T>(item));
        }
        return out;
    }
};

/// {"alphabet": name, "table": [[q, a], ...], "fallback": a}
template <typename Q, typename A>
Json encode(const TableOracle<Q, A>& t) {
    Json table = Json::array();
    for (const auto& [q, a] : t.table) {
        table.push_back(Json::array({encode(q), encode(a)}));
    }
    return Json{{"alphabet", t.alphabet}, {"table", std::move(table)}, {"fallback", encode(t.fallback)}};
}

template <typename Q, typename A>
TableOracle<Q, A> decode_table_oracle(const Json& j) {
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("table") || !j.contains("fallback")) {
        throw DecodeError("table oracle needs alphabet, table and fallback");
    }
    TableOracle<Q, A> out{j.at("alphabet").get<std::string>(), {}, decode<A>(j.at("fallback"))};
    for (const auto& row : j.at("table")) {
        if (!row.is_array() || row.size() != 2) {
            throw DecodeError("table rows are [question, answer] pairs");
        }
        out.table.emplace_back(decode<Q>(row[0]), decode<A>(row[1]));
    }
    return out;
}

} // namespace contmach

#include "contmach/alphabets.hpp"

#include <cmath>

namespace contmach {

namespace {

// Stern's diatomic sequence; fusc(k) / fusc(k + 1) enumerates the positive
// rationals (Calkin-Wilf order) without repetition.
Natural fusc(Natural k) {
    Natural a = 1;
    Natural b = 0;
    while (k > 0) {
        if (k & 1) {
            b += a;
        } else {
            a += b;
        }
        k >>= 1;
    }
    return b;
}

} // namespace

Alphabet<Unit> unit_alphabet() {
    return {"1", [](Natural) { return Unit{}; }, Unit{}};
}

Alphabet<bool> boolean_alphabet() {
    return {"B", [](Natural i) { return i % 2 == 1; }, false};
}

Alphabet<Natural> natural_alphabet() {
    return {"N", [](Natural i) { return i; }, 0};
}

Alphabet<Natural> finite_alphabet(Natural size) {
    return {"{0.." + std::to_string(size - 1) + "}", [size](Natural i) { return i % size; }, 0};
}

Alphabet<Rational> rational_alphabet(Rational fallback) {
    return {"Q",
            [](Natural i) {
                if (i == 0) {
                    return Rational(0);
                }
                const Natural k = (i + 1) / 2;
                Rational r(static_cast<long>(fusc(k)), static_cast<long>(fusc(k + 1)));
                return i % 2 == 1 ? r : -r;
            },
            std::move(fallback)};
}

std::pair<Natural, Natural> cantor_unpair(Natural index) {
    // Largest w with w (w + 1) / 2 <= index.
    auto w = static_cast<Natural>((std::sqrt(8.0L * static_cast<long double>(index) + 1) - 1) / 2);
    while (w * (w + 1) / 2 > index) {
        --w;
    }
    while ((w + 1) * (w + 2) / 2 <= index) {
        ++w;
    }
    const Natural t = w * (w + 1) / 2;
    const Natural second = index - t;
    return {w - second, second};
}

} // namespace contmach

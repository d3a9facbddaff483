#include "contmach/spaces.hpp"

namespace contmach {

bool rational_answer_ok(const Rational& x, const Rational& eps, const Rational& a) {
    if (eps.sign() <= 0) {
        return true;
    }
    return (x - a).abs() <= eps;
}

const std::vector<Rational>& rational_sample_questions() {
    static const std::vector<Rational> samples = [] {
        std::vector<Rational> out;
        for (long k = 0; k <= 64; ++k) {
            out.push_back(Rational::power_of_two(-k));
        }
        out.push_back(Rational(7, 5));
        out.push_back(Rational(1, 3));
        out.push_back(Rational(1, 10));
        out.push_back(Rational(3));
        return out;
    }();
    return samples;
}

RepresentedSpace<Rational, Rational, Rational> rational_reals() {
    return {"R_Q", rational_alphabet(Rational(1)), rational_alphabet(Rational(0)),
            [](const NameOracle<Rational, Rational>& phi, const Rational& x) {
                for (const Rational& eps : rational_sample_questions()) {
                    if (!rational_answer_ok(x, eps, phi(eps))) {
                        return false;
                    }
                }
                return true;
            },
            rational_answer_ok};
}

NameOracle<Rational, Rational> exact_name(const Rational& x) { return NameOracle<Rational, Rational>::constant(x); }

NameOracle<Rational, Rational> grid_name(const Rational& x) {
    return NameOracle<Rational, Rational>([x](const Rational& eps) {
        if (eps.sign() <= 0) {
            return x;
        }
        const Rational step = eps / Rational(2);
        return (x / step + Rational(1, 2)).floor() * step;
    });
}

std::string to_string(Kleenean k) {
    switch (k) {
    case Kleenean::true_k:
        return "true";
    case Kleenean::false_k:
        return "false";
    case Kleenean::bottom:
        break;
    }
    return "bottom";
}

Json encode(Kleenean k) { return to_string(k); }

Kleenean kleenean_on_prefix(const KleeneanName& phi, Natural length) {
    for (Natural n = 0; n < length; ++n) {
        if (auto b = phi(n)) {
            return *b ? Kleenean::true_k : Kleenean::false_k;
        }
    }
    return Kleenean::bottom;
}

RepresentedSpace<Natural, std::optional<bool>, Kleenean> kleeneans(Natural prefix_length) {
    return {"K", natural_alphabet(), optional_alphabet(boolean_alphabet()),
            [prefix_length](const KleeneanName& phi, const Kleenean& k) {
                return kleenean_on_prefix(phi, prefix_length) == k;
            },
            std::nullopt};
}

KleeneanName monotonize_kleenean_name(KleeneanName phi) {
    return KleeneanName([phi = std::move(phi)](const Natural& n) {
        for (Natural k = 0; k <= n; ++k) {
            if (auto b = phi(k)) {
                return b;
            }
        }
        return std::optional<bool>{};
    });
}

MonotoneMachine<Unit, bool, Natural, std::optional<bool>> bool_to_kleenean_realizer() {
    Machine<Unit, bool, Natural, std::optional<bool>> machine(
        [](const NameOracle<Unit, bool>& phi, Effort, const Natural&) {
            return std::optional<std::optional<bool>>(std::optional<bool>(phi(Unit{})));
        });
    Modulus<Unit, bool, Natural> modulus(
        [](const NameOracle<Unit, bool>&, Effort, const Natural&) { return std::vector<Unit>{Unit{}}; });
    return MonotoneMachine<Unit, bool, Natural, std::optional<bool>>::assume_monotone(
        {std::move(machine), std::move(modulus)});
}

MonotoneMachine<Natural, std::optional<bool>, Unit, bool> kleenean_to_bool_machine() {
    Machine<Natural, std::optional<bool>, Unit, bool> machine([](const KleeneanName& phi, Effort n, const Unit&) {
        for (Natural k = 0; k <= n; ++k) {
            if (auto b = phi(k)) {
                return b;
            }
        }
        return std::optional<bool>{};
    });
    Modulus<Natural, std::optional<bool>, Unit> modulus([](const KleeneanName& phi, Effort n, const Unit&) {
        std::vector<Natural> out;
        for (Natural k = 0; k <= n; ++k) {
            out.push_back(k);
            if (phi(k)) {
                break;
            }
        }
        return out;
    });
    return MonotoneMachine<Natural, std::optional<bool>, Unit, bool>::assume_monotone(
        {std::move(machine), std::move(modulus)});
}

} // namespace contmach

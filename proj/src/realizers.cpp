#include "contmach/realizers.hpp"

namespace contmach {

namespace {

struct InversionPlan {
    Rational accuracy;                // 2^-n
    std::optional<Rational> refine;   // min(delta, eps * delta^2) / 2 when delta > 0
};

InversionPlan plan_inversion(const RealName& phi, Effort n, const Rational& eps) {
    InversionPlan plan{Rational::power_of_two(-static_cast<long>(n)), std::nullopt};
    const Rational delta = phi(plan.accuracy).abs() - plan.accuracy;
    if (delta.sign() > 0) {
        plan.refine = min(delta, eps * delta * delta) / Rational(2);
    }
    return plan;
}

} // namespace

ContinuousMachine<Rational, Rational, Rational, Rational> inversion_machine() {
    Machine<Rational, Rational, Rational, Rational> machine([](const RealName& phi, Effort n, const Rational& eps) {
        const auto plan = plan_inversion(phi, n, eps);
        if (!plan.refine) {
            return std::optional<Rational>{};
        }
        const Rational approx = phi(*plan.refine);
        if (approx.is_zero()) {
            return std::optional<Rational>{};
        }
        return std::optional<Rational>(approx.inverse());
    });
    Modulus<Rational, Rational, Rational> modulus([](const RealName& phi, Effort n, const Rational& eps) {
        const auto plan = plan_inversion(phi, n, eps);
        std::vector<Rational> out{plan.accuracy};
        if (plan.refine) {
            out.push_back(*plan.refine);
        }
        return out;
    });
    return {std::move(machine), std::move(modulus)};
}

ContinuousMachine<Rational, Rational, Unit, bool> sign_machine() {
    Machine<Rational, Rational, Unit, bool> machine([](const RealName& phi, Effort n, const Unit&) {
        const Rational accuracy = Rational::power_of_two(-static_cast<long>(n));
        const Rational a = phi(accuracy);
        if (a.abs() > Rational(3) * accuracy) {
            return std::optional<bool>(a.sign() > 0);
        }
        return std::optional<bool>{};
    });
    Modulus<Rational, Rational, Unit> modulus([](const RealName&, Effort n, const Unit&) {
        return std::vector<Rational>{Rational::power_of_two(-static_cast<long>(n))};
    });
    return {std::move(machine), std::move(modulus)};
}

Kleenean sign_kleenean(const Rational& x) {
    if (x.is_zero()) {
        return Kleenean::bottom;
    }
    return x.sign() > 0 ? Kleenean::true_k : Kleenean::false_k;
}

std::string to_string(NameKind kind) { return kind == NameKind::exact ? "exact" : "grid"; }

RealName name_for(const CorpusEntry& entry) {
    return entry.kind == NameKind::exact ? exact_name(entry.point) : grid_name(entry.point);
}

std::string label(const CorpusEntry& entry) { return entry.point.to_string() + ":" + to_string(entry.kind); }

std::vector<CorpusEntry> decode_corpus(const Json& j) {
    if (!j.is_array()) {
        throw DecodeError("corpus must be a JSON array");
    }
    std::vector<CorpusEntry> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("point")) {
            throw DecodeError("corpus entries need a \"point\"");
        }
        NameKind kind = NameKind::exact;
        if (item.contains("name_kind")) {
            const auto& k = item.at("name_kind");
            if (k == "exact") {
                kind = NameKind::exact;
            } else if (k == "grid") {
                kind = NameKind::grid;
            } else {
                throw DecodeError("name_kind must be \"exact\" or \"grid\", got " + k.dump());
            }
        }
        out.push_back({decode<Rational>(item.at("point")), kind});
    }
    return out;
}

Json encode(const std::vector<CorpusEntry>& corpus) {
    Json out = Json::array();
    for (const auto& entry : corpus) {
        out.push_back(Json{{"point", encode(entry.point)}, {"name_kind", to_string(entry.kind)}});
    }
    return out;
}

std::vector<CorpusEntry> corpus_of(const std::vector<Rational>& points) {
    std::vector<CorpusEntry> out;
    for (const auto& p : points) {
        out.push_back({p, NameKind::exact});
        out.push_back({p, NameKind::grid});
    }
    return out;
}

Json encode(const RealizerReport& report) {
    return Json{{"samples", report.samples}, {"failures", report.failures}, {"undecided", report.undecided}};
}

} // namespace contmach

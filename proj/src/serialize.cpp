#include "cdq/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace cdq {

using nlohmann::json;

std::string paulisum_to_json(const PauliSum& s) {
    json arr = json::array();
    for (const auto& [k, c] : s.terms()) {
        PauliTerm t{s.n_qubits(), k.first, k.second};
        arr.push_back({{"paulis", t.to_string()}, {"re", c.real()}, {"im", c.imag()}});
    }
    return arr.dump();
}

PauliSum paulisum_from_json(const std::string& text) {
    json arr = json::parse(text);
    if (!arr.is_array() || arr.empty())
        throw validation_error("paulisum_from_json: expected nonempty array");
    PauliTerm first = PauliTerm::from_string(arr[0].at("paulis").get<std::string>());
    PauliSum out(first.n_qubits);
    for (const auto& e : arr) {
        PauliTerm t = PauliTerm::from_string(e.at("paulis").get<std::string>());
        out.add_term(t, cplx(e.at("re").get<double>(), e.value("im", 0.0)));
    }
    return out;
}

std::string instance_to_json(const ProblemInstance& inst) {
    json j;
    switch (inst.kind) {
        case InstanceKind::TwoLevel: j["kind"] = "two_level"; break;
        case InstanceKind::IsingRing:
            j["kind"] = "ising_ring";
            j["N"] = inst.n_qubits;
            break;
        case InstanceKind::MaxCutGraph: {
            j["kind"] = "maxcut";
            json edges = json::array();
            for (auto [a, b] : inst.edges) edges.push_back({a, b});
            j["edges"] = edges;
            break;
        }
    }
    return j.dump();
}

ProblemInstance instance_from_json(const std::string& text) {
    json j = json::parse(text);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "two_level") return build_two_level();
    if (kind == "ising_ring") return build_ising_ring(j.at("N").get<int>());
    if (kind == "maxcut") {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        return build_maxcut(edges);
    }
    throw validation_error("instance_from_json: unknown kind '" + kind + "'");
}

std::string schedule_to_json(const Schedule& sched) {
    json j;
    j["T"] = sched.T();
    json lam;
    switch (sched.lambda_form()) {
        case LambdaForm::Linear: lam["form"] = "linear"; break;
        case LambdaForm::Smoothstep: lam["form"] = "smoothstep"; break;
        case LambdaForm::Power:
            lam["form"] = "power";
            lam["r"] = sched.lambda_param();
            break;
        case LambdaForm::Interp: {
            lam["form"] = "pchip";
            json knots = json::array();
            const auto& mc = sched.lambda_interp();
            for (std::size_t i = 0; i < mc.xs().size(); ++i)
                knots.push_back({mc.xs()[i], mc.ys()[i]});
            lam["knots"] = knots;
            break;
        }
    }
    j["lambda"] = lam;
    json s;
    switch (sched.s_form()) {
        case SForm::Zero: s["form"] = "zero"; break;
        case SForm::Sin:
            s["form"] = "sin";
            s["s0"] = sched.s_param_a();
            break;
        case SForm::Cubic:
            s["form"] = "cubic";
            s["a"] = sched.s_param_a();
            s["b"] = sched.s_param_b();
            break;
        case SForm::Interp: {
            s["form"] = "pchip";
            json knots = json::array();
            const auto& mc = sched.s_interp();
            for (std::size_t i = 0; i < mc.xs().size(); ++i)
                knots.push_back({mc.xs()[i], mc.ys()[i]});
            s["knots"] = knots;
            break;
        }
    }
    j["s"] = s;
    return j.dump();
}

Schedule schedule_from_json(const std::string& text) {
    json j = json::parse(text);
    double T = j.at("T").get<double>();
    json lam = j.value("lambda", json{{"form", "linear"}});
    json s = j.value("s", json{{"form", "zero"}});
    std::string lf = lam.at("form").get<std::string>();
    SForm sf = SForm::Zero;
    double sa = 0, sb = 0;
    std::string sform = s.at("form").get<std::string>();
    MonotoneCubic s_interp;
    if (sform == "sin") {
        sf = SForm::Sin;
        sa = s.at("s0").get<double>();
    } else if (sform == "cubic") {
        sf = SForm::Cubic;
        sa = s.at("a").get<double>();
        sb = s.value("b", 0.0);
    } else if (sform == "pchip") {
        std::vector<double> xs, ys;
        for (const auto& k : s.at("knots")) {
            xs.push_back(k[0].get<double>());
            ys.push_back(k[1].get<double>());
        }
        s_interp = MonotoneCubic(xs, ys);
        sf = SForm::Interp;
    } else if (sform != "zero") {
        throw validation_error("schedule_from_json: unknown s form");
    }

    Schedule out;
    if (lf == "linear") {
        out = Schedule(T, LambdaForm::Linear, 0.0, sf, sa, sb);
    } else if (lf == "smoothstep") {
        out = Schedule(T, LambdaForm::Smoothstep, 0.0, sf, sa, sb);
    } else if (lf == "power") {
        out = Schedule(T, LambdaForm::Power, lam.at("r").get<double>(), sf, sa, sb);
    } else if (lf == "pchip") {
        std::vector<double> xs, ys;
        for (const auto& k : lam.at("knots")) {
            xs.push_back(k[0].get<double>());
            ys.push_back(k[1].get<double>());
        }
        out = Schedule::interpolated(T, MonotoneCubic(xs, ys), sf, sa, sb);
    } else {
        throw validation_error("schedule_from_json: unknown lambda form");
    }
    if (sf == SForm::Interp) out.set_s_interp(std::move(s_interp));
    return out;
}

std::string report_to_json(const MatchReport& rep, const std::string& digest,
                           unsigned seed) {
    json j;
    j["direction"] = rep.direction == MatchDirection::Forward ? "forward" : "reverse";
    j["p"] = rep.angles.p;
    j["gammas"] = rep.angles.gammas;
    j["betas"] = rep.angles.betas;
    j["taus"] = rep.angles.taus;
    j["step_errors"] = rep.angles.step_errors;
    j["equivalent_T"] = rep.angles.equivalent_T;
    j["total_error"] = rep.total_error;
    j["orders"] = {rep.orders.first, rep.orders.second};
    json v = json::array();
    for (const auto& f : rep.validity)
        v.push_back({{"bch_ok", f.bch_ok}, {"magnus_ok", f.magnus_ok}});
    j["validity"] = v;
    j["divergence_warning"] = rep.divergence_warning;
    j["nonsmooth_warning"] = rep.nonsmooth_warning;
    j["schedule"] = json::parse(schedule_to_json(rep.schedule));
    j["config_digest"] = digest;
    j["seed"] = seed;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j.dump(2);
}

std::string angles_to_csv(const AngleSet& a) {
    std::ostringstream os;
    os << "q,gamma,beta,tau,step_error\n";
    os.precision(12);
    for (int q = 0; q < a.p; ++q) {
        os << q + 1 << "," << a.gammas[static_cast<std::size_t>(q)] << ","
           << a.betas[static_cast<std::size_t>(q)] << ","
           << a.taus[static_cast<std::size_t>(q)] << ","
           << (static_cast<std::size_t>(q) < a.step_errors.size()
                   ? a.step_errors[static_cast<std::size_t>(q)]
                   : 0.0)
           << "\n";
    }
    return os.str();
}

std::string config_digest(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace cdq

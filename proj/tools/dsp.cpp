#include <CLI11.hpp>
#include <iostream>

#include "dsp/constructions.hpp"
#include "dsp/fileio.hpp"

using dsp::Json;

namespace {

// exit codes: 0 success, 1 semantic failure, 2 input error
constexpr int kOk = 0, kFail = 1, kInputError = 2;

Json jnf_to_json(const dsp::Jnf& j) {
    Json out = Json::array();
    for (const auto& e : j.entries) {
        Json ej;
        ej["id"] = e.id;
        ej["blocks"] = e.blocks;
        out.push_back(std::move(ej));
    }
    return out;
}

Json witness_to_json(const dsp::RelationWitness& w) {
    Json out;
    out["cardinality"] = w.cardinality;
    out["sets"] = w.sets;
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_check(const std::string& path, long long budget, int max_card,
              const std::string& flavor_override) {
    Json file = dsp::load_json_file(path);
    if (!flavor_override.empty()) file["flavor"] = flavor_override;
    std::vector<dsp::ConjugacyClassSpec> classes = dsp::classes_from_json(file);
    dsp::JnfTuple jt = dsp::jnf_tuple(classes);

    Json out;
    out["n"] = jt.n();
    out["count"] = jt.count();
    out["flavor"] = dsp::flavor_to_string(classes[0].flavor);
    bool global = dsp::check_global_condition(classes);
    out["global_condition"] = global;
    dsp::Inequalities ineq = dsp::check_inequalities(jt);
    out["inequalities"] = {{"alpha", ineq.alpha}, {"beta", ineq.beta}, {"omega", ineq.omega}};
    out["kappa"] = dsp::kappa(jt);
    out["expected_dimension"] = dsp::expected_dimension(jt);

    dsp::ConditionReport rep = dsp::necessary_condition(jt);
    Json nec;
    nec["verdict"] = rep.satisfied() ? "satisfied" : "violated";
    if (!rep.reason.empty()) nec["reason"] = rep.reason;
    nec["final_n"] = rep.final_n;
    Json trail = Json::array();
    for (const auto& stage : rep.trail) {
        Json st;
        st["n"] = stage.n();
        Json cl = Json::array();
        for (const auto& j : stage.jnfs) cl.push_back(jnf_to_json(j));
        st["classes"] = std::move(cl);
        trail.push_back(std::move(st));
    }
    nec["trail"] = std::move(trail);
    out["necessary"] = std::move(nec);

    dsp::RelationOptions opts;
    opts.budget = budget;
    opts.max_card = max_card;
    auto rels = dsp::enumerate_relations(classes, opts);
    Json rj;
    rj["generic"] = rels.empty();
    rj["count"] = rels.size();
    Json witnesses = Json::array();
    for (const auto& w : rels) witnesses.push_back(witness_to_json(w));
    rj["witnesses"] = std::move(witnesses);
    out["relations"] = std::move(rj);

    dsp::DeltaResult delta = dsp::delta_min_rank_sum(classes);
    bool delta_holds = delta.min_value >= 2 * jt.n();
    Json dj;
    dj["min"] = delta.min_value;
    dj["threshold"] = 2 * jt.n();
    dj["holds"] = delta_holds;
    Json wit = Json::array();
    for (const auto& c : delta.witness) {
        Json cj;
        cj["kind"] = c.free ? "free" : "eigenvalue";
        if (!c.free) cj["index"] = c.eigenvalue_index;
        if (c.shift) cj["shift"] = dsp::to_string(*c.shift);
        wit.push_back(std::move(cj));
    }
    dj["witness"] = std::move(wit);
    out["delta"] = std::move(dj);

    bool pass = global && ineq.alpha && ineq.beta && rep.satisfied();
    out["necessary_pass"] = pass;
    emit(out);
    std::cerr << "necessary conditions: " << (pass ? "pass" : "FAIL") << " (verdict "
              << (rep.satisfied() ? "satisfied" : "violated (" + rep.reason + ")")
              << ", kappa " << dsp::kappa(jt) << ", " << (rels.empty() ? "generic" : "non-generic")
              << ", delta " << (delta_holds ? "holds" : "fails") << ")\n";
    return pass ? kOk : kFail;
}

int run_relations(const std::string& path, long long budget, int max_card,
                  const std::string& flavor_override) {
    Json file = dsp::load_json_file(path);
    if (!flavor_override.empty()) file["flavor"] = flavor_override;
    std::vector<dsp::ConjugacyClassSpec> classes = dsp::classes_from_json(file);
    dsp::RelationOptions opts;
    opts.budget = budget;
    opts.max_card = max_card;
    auto rels = dsp::enumerate_relations(classes, opts);
    Json out;
    out["generic"] = rels.empty();
    out["count"] = rels.size();
    Json witnesses = Json::array();
    for (const auto& w : rels) witnesses.push_back(witness_to_json(w));
    out["witnesses"] = std::move(witnesses);
    emit(out);
    std::cerr << (rels.empty() ? "generic eigenvalues (no relation found)\n"
                               : std::to_string(rels.size()) + " relation(s) found\n");
    return kOk;
}

struct VerifyOutcome {
    Json report;
    std::vector<std::string> failures;
};

VerifyOutcome analyze_tuple(const dsp::MatrixTuple& t, const Json& expect) {
    VerifyOutcome out;
    Json& j = out.report;
    j["n"] = t.n();
    j["count"] = t.count();
    j["flavor"] = dsp::flavor_to_string(t.flavor);

    dsp::VerifyReport rep = dsp::verify_tuple(t);
    j["constraint"] = rep.constraint_ok;
    if (t.classes) j["memberships"] = rep.membership_ok;
    int centralizer = dsp::centralizer_dimension(t);
    int algebra = dsp::algebra_dimension(t);
    j["centralizer_dimension"] = centralizer;
    j["algebra_dimension"] = algebra;
    bool irreducible = algebra == t.n() * t.n();
    j["irreducible"] = irreducible;

    if (t.classes) {
        Json inv;
        dsp::InvariantReport lines = dsp::invariant_subspaces(t, 1);
        Json lj = Json::array();
        for (const auto& line : lines.lines) {
            Json one;
            one["selection"] = line.selection;
            one["dimension"] = line.basis.size();
            lj.push_back(std::move(one));
        }
        inv["lines"] = std::move(lj);
        if (t.n() >= 3) {
            try {
                dsp::InvariantReport planes = dsp::invariant_subspaces(t, 2);
                Json pj = Json::array();
                for (const auto& st : planes.planes) {
                    Json one;
                    Json sel = Json::array();
                    for (const auto& sels : st.pair_selections) {
                        Json sv = Json::array();
                        for (auto [a, b] : sels) sv.push_back(Json::array({a, b}));
                        sel.push_back(std::move(sv));
                    }
                    one["pair_selections"] = std::move(sel);
                    one["kernel_dimension"] = st.omega_basis.size();
                    if (st.omega_basis.size() == 1) one["decomposable"] = st.decomposable;
                    pj.push_back(std::move(one));
                }
                inv["planes"] = std::move(pj);
            } catch (const dsp::NotDiagonalizable&) {
                inv["planes"] = "skipped: non-diagonalizable class";
            }
        }
        j["invariant_subspaces"] = std::move(inv);
    }

    if (t.classes && t.flavor == dsp::Flavor::additive && rep.all_ok()) {
        dsp::TangentDims dims = dsp::tangent_dimension(t);
        j["tangent"] = {{"direct", dims.direct}, {"formula", dims.formula},
                        {"agree", dims.direct == dims.formula}};
    }

    // expectations: explicit block wins, otherwise the constraint and
    // memberships are expected to hold
    auto fail = [&](const std::string& what) { out.failures.push_back(what); };
    if (!expect.is_null() && !expect.empty()) {
        for (auto it = expect.begin(); it != expect.end(); ++it) {
            const std::string& key = it.key();
            if (key == "constraint") {
                if (rep.constraint_ok != it.value().get<bool>()) fail("constraint");
            } else if (key == "memberships") {
                if (it.value().is_boolean()) {
                    bool want = it.value().get<bool>();
                    bool all = true;
                    for (bool m : rep.membership_ok) all = all && m;
                    if (all != want) fail("memberships");
                } else {
                    auto want = it.value().get<std::vector<bool>>();
                    if (want != rep.membership_ok) fail("memberships");
                }
            } else if (key == "irreducible") {
                if (irreducible != it.value().get<bool>()) fail("irreducible");
            } else if (key == "centralizer") {
                if (centralizer != it.value().get<int>()) fail("centralizer");
            } else if (key == "algebra_dimension") {
                if (algebra != it.value().get<int>()) fail("algebra_dimension");
            } else if (key == "tangent") {
                if (!j.contains("tangent") ||
                    j["tangent"]["direct"].get<long long>() != it.value().get<long long>())
                    fail("tangent");
            } else {
                throw dsp::FileFormatError("unknown expectation \"" + key + "\"");
            }
        }
    } else {
        if (!rep.constraint_ok) fail("constraint");
        for (std::size_t i = 0; i < rep.membership_ok.size(); ++i)
            if (!rep.membership_ok[i]) fail("membership of class " + std::to_string(i));
    }
    j["expect_failures"] = out.failures;
    return out;
}

int run_verify(const std::string& tuple_path, const std::string& class_path) {
    Json tj = dsp::load_json_file(tuple_path);
    dsp::MatrixTuple t = dsp::tuple_from_json(tj);
    if (!class_path.empty()) {
        Json cj = dsp::load_json_file(class_path);
        auto classes = dsp::classes_from_json(cj);
        if (static_cast<int>(classes.size()) != t.count())
            throw dsp::FileFormatError("class count must match matrix count");
        for (const auto& c : classes) {
            if (c.n != t.n()) throw dsp::FileFormatError("class size differs from tuple size");
            if (c.flavor != t.flavor) throw dsp::FileFormatError("class flavor differs");
        }
        t.classes = std::move(classes);
    }
    Json expect = tj.contains("expect") ? tj["expect"] : Json();
    VerifyOutcome out = analyze_tuple(t, expect);
    emit(out.report);
    if (out.failures.empty()) {
        std::cerr << "verification passed\n";
        return kOk;
    }
    std::cerr << "verification FAILED:";
    for (const auto& f : out.failures) std::cerr << " " << f;
    std::cerr << "\n";
    return kFail;
}

dsp::SpectralData2x2 spectral_from_params(const Json& params) {
    dsp::SpectralData2x2 s;
    if (params.contains("lambdas") || params.contains("mus")) {
        for (const auto& v : params.at("lambdas")) s.lambdas.push_back(dsp::parse_scalar(v.get<std::string>()));
        for (const auto& v : params.at("mus")) s.mus.push_back(dsp::parse_scalar(v.get<std::string>()));
    } else {
        s.lambdas = {dsp::Scalar(0L), dsp::Scalar(1L), dsp::Scalar(3L), dsp::Scalar(-4L)};
        s.mus = {dsp::Scalar(2L), dsp::Scalar(5L), dsp::Scalar(11L), dsp::Scalar(-18L)};
    }
    s.validate();
    return s;
}

int run_construct(const std::string& kind, const std::string& params_path,
                  const std::string& out_path, std::uint64_t seed_flag, long long budget) {
    Json params = params_path.empty() ? Json::object() : dsp::load_json_file(params_path);
    std::uint64_t seed = params.value("seed", seed_flag);
    dsp::MatrixTuple t;
    Json extra;

    if (kind == "type-b") {
        dsp::SpectralData2x2 s = spectral_from_params(params);
        dsp::Scalar u = dsp::parse_scalar(params.value("u", "1"));
        t = dsp::build_type_b_quadruple(s, u);
    } else if (kind == "type-h") {
        dsp::SpectralData2x2 s = spectral_from_params(params);
        int l = params.value("l", 1);
        bool permuted = params.value("permuted", false);
        t = dsp::build_type_h_quadruple(l, s, permuted);
    } else if (kind == "hb") {
        dsp::SpectralData2x2 s = spectral_from_params(params);
        if (!params.contains("n") || !params.contains("s"))
            throw dsp::FileFormatError("hb construction needs \"n\" and \"s\"");
        int n = params["n"].get<int>(), sidx = params["s"].get<int>();
        std::vector<dsp::Scalar> us;
        if (params.contains("u_list"))
            for (const auto& v : params["u_list"]) us.push_back(dsp::parse_scalar(v.get<std::string>()));
        else
            for (int i = 0; i < sidx; ++i) us.push_back(dsp::Scalar(static_cast<long>(i + 1)));
        t = dsp::build_hb_point(sidx, s, n, us, params.value("conjugate", false), seed);
        dsp::HbDims dims = dsp::stratum_dims_hb(n, sidx);
        extra["stratum_dimension"] = dims.dim_hb;
        extra["expected_dimension"] = dims.expected;
    } else if (kind == "disconnected") {
        std::string variant = params.value("variant", "component-upper");
        dsp::Scalar eps = dsp::parse_scalar(params.value("eps", "0"));
        dsp::DisconnectedVariant v;
        if (variant == "component-upper") v = dsp::DisconnectedVariant::component_upper;
        else if (variant == "component-lower") v = dsp::DisconnectedVariant::component_lower;
        else if (variant == "family-upper") v = dsp::DisconnectedVariant::family_upper;
        else if (variant == "family-lower") v = dsp::DisconnectedVariant::family_lower;
        else throw dsp::FileFormatError("unknown disconnected variant \"" + variant + "\"");
        t = dsp::build_disconnected_triple(v, eps);
    } else if (kind == "spiked") {
        int n = params.value("n", 4), p = params.value("p", 5);
        dsp::RelationOptions ropts;
        ropts.budget = budget;
        dsp::SpikedInstance inst = dsp::make_spiked_instance(n, p, seed, ropts);
        dsp::MatrixTuple core = dsp::build_2x2_irreducible(inst.star_classes, seed);
        dsp::ExtendSide side =
            params.value("side", "left") == "right" ? dsp::ExtendSide::right : dsp::ExtendSide::left;
        dsp::ExtensionResult res = dsp::extend_scalar_block(core, inst.mu, side);
        t = res.tuple;
        extra["extension_dims"] = {{"big", res.dim_big}, {"small", res.dim_small}};
        dsp::SpikedDims dims = dsp::stratum_dims_spiked(n, inst.m);
        extra["dim_u"] = dims.dim_u;
        extra["dim_w"] = dims.dim_w;
    } else if (kind == "extend") {
        Json tj = dsp::load_json_file(params.at("tuple").get<std::string>());
        dsp::MatrixTuple h = dsp::tuple_from_json(tj);
        std::vector<dsp::Scalar> mus;
        for (const auto& v : params.at("mus")) mus.push_back(dsp::parse_scalar(v.get<std::string>()));
        dsp::ExtendSide side =
            params.value("side", "left") == "right" ? dsp::ExtendSide::right : dsp::ExtendSide::left;
        dsp::ExtensionResult res = dsp::extend_scalar_block(h, mus, side);
        t = res.tuple;
        extra["extension_dims"] = {{"big", res.dim_big}, {"small", res.dim_small}};
    } else {
        throw dsp::FileFormatError(
            "unknown construction kind \"" + kind +
            "\" (expected type-b | type-h | hb | disconnected | spiked | extend)");
    }

    // record the verified facts in the expect block so the file round-trips
    // through `verify` with exit 0
    dsp::VerifyReport rep = dsp::verify_tuple(t);
    int centralizer = dsp::centralizer_dimension(t);
    int algebra = dsp::algebra_dimension(t);
    Json expect;
    expect["constraint"] = rep.constraint_ok;
    if (t.classes) expect["memberships"] = rep.membership_ok;
    expect["centralizer"] = centralizer;
    expect["irreducible"] = algebra == t.n() * t.n();

    Json file = dsp::tuple_to_json(t, expect);
    if (!extra.is_null() && !extra.empty()) file["construction"] = extra;
    if (out_path.empty())
        emit(file);
    else
        dsp::write_json_file(out_path, file);

    std::cerr << "constructed " << kind << ": n=" << t.n() << " count=" << t.count()
              << " constraint=" << (rep.constraint_ok ? "ok" : "VIOLATED") << " memberships=";
    for (bool m : rep.membership_ok) std::cerr << (m ? "1" : "0");
    std::cerr << " centralizer=" << centralizer << " algebra=" << algebra
              << (algebra == t.n() * t.n() ? " (irreducible)" : " (reducible)") << "\n";
    if (t.classes && t.flavor == dsp::Flavor::additive && rep.all_ok()) {
        dsp::TangentDims dims = dsp::tangent_dimension(t);
        std::cerr << "tangent dimension: direct=" << dims.direct << " formula=" << dims.formula
                  << "\n";
    }
    return kOk;
}

int run_dims(const std::string& class_path, const std::vector<int>& hb,
             const std::string& spiked_path) {
    int modes = (!class_path.empty()) + (!hb.empty()) + (!spiked_path.empty());
    if (modes != 1)
        throw dsp::FileFormatError("dims needs exactly one of: a class file, --hb, --spiked");
    Json out;
    if (!hb.empty()) {
        dsp::HbDims d = dsp::stratum_dims_hb(hb[0], hb[1]);
        out["kind"] = "hb";
        out["n"] = d.n;
        out["s"] = d.s;
        out["dimension"] = d.dim_hb;
        out["expected_dimension"] = d.expected;
        out["kappa"] = d.kappa;
        if (d.alt_form) out["half_spectrum_form"] = *d.alt_form;
        emit(out);
        std::cerr << "hb stratum dimension: " << d.dim_hb << " (expected " << d.expected << ")\n";
    } else if (!spiked_path.empty()) {
        Json params = dsp::load_json_file(spiked_path);
        int n = params.at("n").get<int>();
        std::vector<int> m;
        if (params.contains("m")) {
            m = params["m"].get<std::vector<int>>();
        } else {
            dsp::SpikedInstance inst =
                dsp::make_spiked_instance(n, params.at("p").get<int>(), params.value("seed", 1));
            m = inst.m;
        }
        dsp::SpikedDims d = dsp::stratum_dims_spiked(n, m);
        out["kind"] = "spiked";
        out["n"] = d.n;
        out["r"] = d.r;
        out["dim_u"] = d.dim_u;
        out["dim_w"] = d.dim_w;
        out["kappa"] = d.kappa;
        out["expected_dimension"] = d.expected;
        out["audit"] = {{"u_prime", d.u_prime},
                        {"u_star", d.u_star},
                        {"transversal_u", d.transversal_u},
                        {"transversal_w", d.transversal_w},
                        {"w_pre_transversal", d.w_pre_transversal}};
        emit(out);
        std::cerr << "dim U = " << d.dim_u << ", dim W = " << d.dim_w << " (expected "
                  << d.expected << ")\n";
    } else {
        Json file = dsp::load_json_file(class_path);
        auto classes = dsp::classes_from_json(file);
        dsp::JnfTuple jt = dsp::jnf_tuple(classes);
        out["kind"] = "classes";
        out["n"] = jt.n();
        out["kappa"] = dsp::kappa(jt);
        out["expected_dimension"] = dsp::expected_dimension(jt);
        Json per = Json::array();
        for (const auto& c : classes) per.push_back(Json{{"r", c.r()}, {"d", c.d()}});
        out["per_class"] = std::move(per);
        emit(out);
        std::cerr << "kappa = " << dsp::kappa(jt) << ", expected dimension "
                  << dsp::expected_dimension(jt) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks and constructions for additive/multiplicative "
                 "matrix tuple varieties with prescribed conjugacy classes"};
    app.require_subcommand(1);

    std::string class_path, tuple_path, params_path, out_path, flavor, kind, spiked_path;
    long long budget = 10'000'000;
    int max_card = 0;
    std::uint64_t seed = 1;
    std::vector<int> hb;

    CLI::App* check = app.add_subcommand("check", "class-level necessary conditions");
    check->add_option("classfile", class_path)->required();
    check->add_option("--budget", budget, "relation enumeration budget");
    check->add_option("--max-card", max_card, "relation cardinality bound (default n-1)");
    check->add_option("--flavor", flavor, "override the file's flavor");

    CLI::App* relations = app.add_subcommand("relations", "non-genericity relations");
    relations->add_option("classfile", class_path)->required();
    relations->add_option("--budget", budget);
    relations->add_option("--max-card", max_card);
    relations->add_option("--flavor", flavor);

    CLI::App* construct = app.add_subcommand("construct", "build a matrix family");
    construct->add_option("kind", kind, "type-b | type-h | hb | disconnected | spiked | extend")
        ->required();
    construct->add_option("params", params_path, "JSON parameter file");
    construct->add_option("-o,--output", out_path, "output tuple file (default stdout)");
    construct->add_option("--seed", seed);
    construct->add_option("--budget", budget, "relation certification budget");

    CLI::App* verify = app.add_subcommand("verify", "full analysis of a tuple file");
    verify->add_option("tuplefile", tuple_path)->required();
    verify->add_option("classfile", class_path, "bind classes from a separate file");

    CLI::App* dims = app.add_subcommand("dims", "stratum dimension formulas");
    dims->add_option("classfile", class_path);
    dims->add_option("--hb", hb, "n s")->expected(2);
    dims->add_option("--spiked", spiked_path, "parameter file with n and m (or n, p, seed)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (app.got_subcommand(check)) return run_check(class_path, budget, max_card, flavor);
        if (app.got_subcommand(relations))
            return run_relations(class_path, budget, max_card, flavor);
        if (app.got_subcommand(construct)) return run_construct(kind, params_path, out_path, seed, budget);
        if (app.got_subcommand(verify)) return run_verify(tuple_path, class_path);
        if (app.got_subcommand(dims)) return run_dims(class_path, hb, spiked_path);
    } catch (const dsp::ConstructionFailed& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kFail;
    } catch (const dsp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "posthopf/cli.hpp"

using namespace posthopf;

namespace {

// Runtime ceilings in seconds.
constexpr double kHopfSuiteLimit = 1.0;
constexpr double kFamilySuiteLimit = 5.0;
constexpr double kClassifyLimit = 300.0;
constexpr double kEnumerateLimit = 600.0;

// Residuals must be exactly zero; there is no numeric tolerance anywhere.
constexpr std::size_t kRandomInstances = 200;
constexpr std::uint32_t kSeed = 20240601;

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) note << "; ";
            else note.str("");
            ok = false;
            note << what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RegistryPtr registry_of(const TriangleOp<Polynomial>& op) {
    for (const auto& cell : op.cells())
        for (const auto& e : cell)
            if (e.registry()) return e.registry();
    return make_registry();
}

std::vector<TriangleOp<Polynomial>> tables_of(const ClassificationResult& r) {
    std::vector<TriangleOp<Polynomial>> out;
    for (const auto& b : r.maximal_families) out.push_back(*b.table);
    return out;
}

void hopf_suite(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto h = sweedler_h4();
    auto report = verify_hopf_axioms(h);
    o.require(report.passed() && report.checked > 0, "H4 residuals not all zero");
    o.require(cmd_verify("builtin:h4", "", Mode::relaxed).status == RunStatus::pass, "verify --hopf builtin:h4 failed");
    const double elapsed = seconds_since(t0);
    o.require(elapsed < kHopfSuiteLimit, "runtime " + std::to_string(elapsed) + " s");

    std::size_t mutants = 0, caught = 0;
    auto mutate = [&](auto getter, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            auto mul = h.mul_tensor(), unit = h.unit(), comul = h.comul_tensor(), counit = h.counit(),
                 anti = h.antipode_matrix();
            getter(mul, unit, comul, counit, anti)[i] += Rational(1);
            HopfStructure m(h.basis(), mul, unit, comul, counit, anti, Rational(0), Rational(1));
            ++mutants;
            if (!verify_hopf_axioms(m).passed()) ++caught;
        }
    };
    using V = std::vector<Rational>;
    mutate([](V& m, V&, V&, V&, V&) -> V& { return m; }, 64);
    mutate([](V&, V& u, V&, V&, V&) -> V& { return u; }, 4);
    mutate([](V&, V&, V& c, V&, V&) -> V& { return c; }, 64);
    mutate([](V&, V&, V&, V& e, V&) -> V& { return e; }, 4);
    mutate([](V&, V&, V&, V&, V& s) -> V& { return s; }, 16);
    o.require(caught == mutants, std::to_string(mutants - caught) + " mutants undetected");
    if (o.ok) o.note << report.checked << " residuals zero, " << caught << "/" << mutants << " mutants detected, " << elapsed << " s";
}

void family_validity(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t residuals = 0;
    for (Family f : all_families) {
        auto op = family_table(f);
        auto h = to_polynomial(sweedler_h4(), registry_of(op));
        for (const auto& r : {check_coalgebra_hom(h, op), check_distributivity(h, op), check_weighted_assoc(h, op),
                              check_counit_absorption(h, op)}) {
            residuals += r.checked;
            o.require(r.passed(), std::string("family (") + to_string(f) + ") has a nonzero residual");
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < kFamilySuiteLimit, "runtime " + std::to_string(elapsed) + " s");
    if (o.ok) o.note << "6 families, " << residuals << " residuals identically zero, " << elapsed << " s";
}

void weak_split(Outcome& o) {
    const std::string expected_witness[] = {"", "", "", "v", "v", "g"};
    std::string summary;
    for (Family f : all_families) {
        auto op = family_table(f);
        auto h = to_polynomial(sweedler_h4(), registry_of(op));
        auto r = check_unitality(h, op);
        const auto idx = static_cast<std::size_t>(f);
        const bool should_pass = idx < 3;
        o.require(r.passed() == should_pass, std::string("unitality wrong for (") + to_string(f) + ")");
        if (!r.passed()) {
            auto witness = sweedler_h4().basis().at(r.first_failure("unitality")->indices.at(0));
            o.require(witness == expected_witness[idx], std::string("witness for (") + to_string(f) + ") is " + witness);
            summary += std::string(" (") + to_string(f) + ")@" + witness;
        }
    }
    if (o.ok) o.note << "unital: (i) (ii) (iii); failing:" << summary;
}

struct Classifications {
    ClassificationResult relaxed, weak, relaxed64;
    double relaxed_seconds = 0;
};

void classification(Outcome& o, const Classifications& c) {
    const auto& r = c.relaxed;
    o.require(!r.stats.limit_hit, "solver limit hit");
    o.require(r.unresolved_count() == 0, std::to_string(r.unresolved_count()) + " unresolved branches");
    auto m = match_families(r, builtin_family_tables());
    o.require(m.bijection(), "no bijection with the six tables");
    o.require(c.relaxed_seconds <= kClassifyLimit, "runtime " + std::to_string(c.relaxed_seconds) + " s");
    const Polynomial one(Rational(1)), zero(Rational(0));
    const Vec<Polynomial> unit{one, zero, zero, zero}, g{zero, one, zero, zero};
    std::size_t resolved = 0;
    for (const auto& b : r.branches) {
        if (b.status != BranchStatus::resolved) continue;
        ++resolved;
        o.require(b.table->at(0, 0) == unit, "a resolved branch has 1 ▷ 1 != 1");
        o.require(b.table->at(1, 1) == unit || b.table->at(1, 1) == g, "a resolved branch has g ▷ g outside {1, g}");
    }
    if (o.ok)
        o.note << r.maximal_families.size() << " maximal families in bijection, " << resolved
               << " resolved branches, 0 unresolved, " << r.stats.nodes << " nodes, " << c.relaxed_seconds << " s";
}

void parameterization(Outcome& o, const Classifications& c) {
    o.require(c.relaxed64.unresolved_count() == 0, "full64 left unresolved branches");
    auto m = match_families(tables_of(c.relaxed), tables_of(c.relaxed64));
    o.require(m.bijection(), "generator32 and full64 families differ");
    o.require(match_families(c.relaxed64, builtin_family_tables()).bijection(), "full64 does not match the six tables");
    if (o.ok) o.note << "generator32 and full64 agree on " << m.pairs.size() << " families";
}

void weak_classification(Outcome& o, const Classifications& c) {
    o.require(c.weak.unresolved_count() == 0, "weak run left unresolved branches");
    auto unital = reference_families(Mode::weak);
    o.require(unital.size() == 3, "unitality filter did not keep three tables");
    auto m = match_families(c.weak, unital);
    o.require(m.bijection(), "weak families do not match (i), (ii), (iii)");
    if (o.ok)
        o.note << "matches (i) (ii) (iii); relaxed-only families: "
               << c.relaxed.maximal_families.size() - c.weak.maximal_families.size()
               << " ((iv) (v) (vi))";
}

void oracle(Outcome& o) {
    const std::pair<std::uint32_t, std::size_t> expected[] = {{3, 10}, {5, 14}};
    for (auto [p, count] : expected) {
        auto t0 = std::chrono::steady_clock::now();
        EnumerationTask task;
        task.prime = p;
        auto report = enumerate(task);
        const double elapsed = seconds_since(t0);
        auto evaluations = evaluate_families(builtin_family_tables(), p);
        auto diff = compare_with_families(report, builtin_family_tables());
        o.require(!report.stats.limit_exceeded, "limit hit at p=" + std::to_string(p));
        o.require(evaluations.size() == count, "family evaluations at p=" + std::to_string(p) + " = " +
                                                   std::to_string(evaluations.size()));
        o.require(report.count() == count, "enumerated " + std::to_string(report.count()) + " at p=" + std::to_string(p));
        o.require(diff.empty(), "nonempty diff at p=" + std::to_string(p));
        auto h = sweedler_h4_mod_p(p);
        for (const auto& op : report.structures)
            o.require(check_counit_absorption(h, op).passed(), "x ▷ 1 != ε(x)1 at p=" + std::to_string(p));
        o.require(elapsed <= kEnumerateLimit, "runtime at p=" + std::to_string(p));
        if (o.ok) o.note << (p == 3 ? "" : ", ") << "p=" << p << ": " << report.count() << " = family set, " << elapsed << " s";
    }
}

void primitives(Outcome& o) {
    auto g = cmd_grouplikes();
    o.require(g.payload.at("group_likes") == json::array({"1", "g"}), "group-likes differ from {1, g}");
    const std::tuple<const char*, const char*, json> cases[] = {
        {"1", "1", json::array()},
        {"g", "1", json::array({"v", "1-g"})},
        {"1", "g", json::array({"gv", "1-g"})},
        {"g", "g", json::array()},
    };
    std::string dims;
    for (const auto& [a, b, basis] : cases) {
        auto r = cmd_primitives(a, b);
        o.require(r.status == RunStatus::pass && r.payload.at("basis") == basis,
                  std::string("P_{") + a + "," + b + "} = " + r.payload.dump());
        dims += (dims.empty() ? "" : ",") + std::to_string(r.payload.value("dimension", 99));
    }
    o.require(cmd_primitives("v", "1").status == RunStatus::error, "non-group-like accepted");
    if (o.ok) o.note << "G = {1, g}; dimensions " << dims << "; spans {v, 1-g}, {gv, 1-g}";
}

void properties(Outcome& o, const Classifications& c) {
    // Solver soundness: substitute every resolved branch into its system.
    auto h = sweedler_h4();
    std::size_t substituted = 0;
    for (Mode mode : {Mode::relaxed, Mode::weak}) {
        auto unknown = build_unknown_op(h, Parameterization::generator32);
        auto sys = generate_constraints(h, unknown, mode);
        const auto& r = mode == Mode::relaxed ? c.relaxed : c.weak;
        for (const auto& b : r.branches) {
            if (b.status != BranchStatus::resolved) continue;
            std::map<VarId, Polynomial> values;
            for (const auto& [name, value] : b.assignments) values.emplace(*sys.registry->find(name), value);
            for (const auto& e : sys.equations) {
                o.require(e.poly.substitute(values).is_zero(), "resolved branch violates " + e.provenance);
                ++substituted;
            }
        }
    }

    // Canonicality round trips and evaluate_mod_p homomorphism.
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<long> coef(-9, 9), den(1, 6), expo(0, 3), terms(0, 4);
    auto reg = make_registry();
    std::vector<VarId> ids{reg->add("x"), reg->add("y"), reg->add("z")};
    auto random_poly = [&] {
        std::vector<Term> ts;
        for (long k = terms(rng); k > 0; --k) {
            Monomial m;
            for (auto v : ids)
                if (long e = expo(rng)) m = m * Monomial::variable(v, static_cast<std::uint32_t>(e));
            ts.push_back({m, Rational(coef(rng), den(rng))});
        }
        return Polynomial::from_terms(reg, ts);
    };
    const std::uint32_t primes[] = {7, 11, 13};
    for (std::size_t t = 0; t < kRandomInstances; ++t) {
        auto f = random_poly(), g = random_poly();
        auto back = Polynomial::parse(f.to_string(), reg);
        o.require(back == f && back.to_string() == f.to_string(), "round trip failed for " + f.to_string());
        const auto p = primes[t % 3];
        std::map<VarId, Fp> at;
        for (auto v : ids) at.emplace(v, Fp(static_cast<std::int64_t>(rng() % p), p));
        auto ef = f.evaluate_mod_p(at, p), eg = g.evaluate_mod_p(at, p);
        o.require((f * g).evaluate_mod_p(at, p) == ef * eg, "eval(fg) != eval(f)eval(g)");
        o.require((f + g).evaluate_mod_p(at, p) == ef + eg, "eval(f+g) != eval(f)+eval(g)");
    }

    // Determinism: two runs of every serialized output agree byte for byte.
    auto twice = [&](const std::function<std::string()>& produce, const std::string& what) {
        o.require(produce() == produce(), what + " output differs between runs");
    };
    twice([] { return cmd_families(true, false).human_text + canonical_dump(cmd_families(true, false).payload); },
          "families");
    twice([] { return canonical_dump(cmd_verify("builtin:h4", "family:iv", Mode::weak).payload); }, "verify");
    twice([] { return canonical_dump(cmd_classify(Mode::weak, Parameterization::generator32).payload); }, "classify");
    twice([] { return canonical_dump(cmd_enumerate(3, Mode::relaxed).payload); }, "enumerate");
    twice([] { return cmd_primitives("g", "1").human_text + cmd_grouplikes().human_text; }, "primitives");
    o.require(canonical_dump(classification_to_json(c.relaxed, Mode::relaxed, Parameterization::generator32)) ==
                  canonical_dump(classification_to_json(classify_h4(Mode::relaxed, Parameterization::generator32),
                                                        Mode::relaxed, Parameterization::generator32)),
              "relaxed classification JSON differs between runs");
    if (o.ok)
        o.note << substituted << " branch substitutions zero, " << kRandomInstances
               << " round trips and homomorphism checks, 6 outputs deterministic";
}

}  // namespace

int main() {
    Classifications c;
    auto t0 = std::chrono::steady_clock::now();
    c.relaxed = classify_h4(Mode::relaxed, Parameterization::generator32);
    c.relaxed_seconds = seconds_since(t0);
    c.weak = classify_h4(Mode::weak, Parameterization::generator32);
    c.relaxed64 = classify_h4(Mode::relaxed, Parameterization::full64);

    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"Hopf axiom suite", hopf_suite},
        {"family validity", family_validity},
        {"weak/relaxed split", weak_split},
        {"classification reproduction", [&](Outcome& o) { classification(o, c); }},
        {"parameterization cross-check", [&](Outcome& o) { parameterization(o, c); }},
        {"weak-mode classification", [&](Outcome& o) { weak_classification(o, c); }},
        {"finite-field oracle", oracle},
        {"primitive spaces", primitives},
        {"property suites", [&](Outcome& o) { properties(o, c); }},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note.str(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << ++index << " " << name << ": " << (o.ok ? "PASS" : "FAIL") << " (" << o.note.str()
                  << ")\n";
        failed += o.ok ? 0 : 1;
    }
    std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << "\n";
    return failed ? 1 : 0;
}

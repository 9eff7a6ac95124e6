#include <doctest.h>

#include "posthopf/classifier.hpp"

using namespace posthopf;

namespace {

struct Runs {
    ClassificationResult relaxed = classify_h4(Mode::relaxed, Parameterization::generator32);
    ClassificationResult weak = classify_h4(Mode::weak, Parameterization::generator32);
    ClassificationResult relaxed64 = classify_h4(Mode::relaxed, Parameterization::full64);
};

const Runs& runs() {
    static const Runs r;
    return r;
}

RegistryPtr registry_of(const TriangleOp<Polynomial>& op) {
    for (const auto& cell : op.cells())
        for (const auto& e : cell)
            if (e.registry()) return e.registry();
    return make_registry();
}

Branch resolved_branch(TriangleOp<Polynomial> table) {
    Branch b;
    b.status = BranchStatus::resolved;
    b.table = std::move(table);
    return b;
}

std::vector<TriangleOp<Polynomial>> unital_families() {
    return {family_table(Family::i), family_table(Family::ii), family_table(Family::iii)};
}

}  // namespace

TEST_CASE("unknown tables") {
    auto h = sweedler_h4();
    auto g32 = build_unknown_op(h, Parameterization::generator32);
    auto f64 = build_unknown_op(h, Parameterization::full64);
    CHECK(g32.unknowns.size() == 32);
    CHECK(f64.unknowns.size() == 64);
    CHECK(g32.registry->size() == 32);
    const auto& e11 = g32.op.at(0, 0)[0];
    CHECK(e11.total_degree() == 2);
    for (VarId v : e11.variables()) CHECK(g32.registry->name(v).rfind("c_0_", 0) == 0);
    CHECK(g32.op.at(0, 1)[2] == Polynomial::parse("c_0_1_2", g32.registry));
    CHECK(parse_parameterization("full64") == Parameterization::full64);
    CHECK_THROWS_AS(parse_parameterization("full32"), std::invalid_argument);
}

TEST_CASE("constraint generation") {
    auto h = sweedler_h4();
    auto unknown = build_unknown_op(h, Parameterization::generator32);
    auto relaxed = generate_constraints(h, unknown, Mode::relaxed);
    auto weak = generate_constraints(h, unknown, Mode::weak);
    CHECK(weak.equations.size() > relaxed.equations.size());
    for (const auto& e : relaxed.equations) {
        CHECK_FALSE(e.poly.is_zero());
        CHECK_FALSE(e.provenance.empty());
    }
    std::set<std::string> monic;
    for (const auto& e : relaxed.equations) monic.insert(e.poly.monic().to_string());
    CHECK(monic.size() == relaxed.equations.size());

    // Unitality pins 1 ▷ g to g: its coefficients appear as linear equations.
    auto target = Polynomial::parse("c_0_1_1 - 1", unknown.registry);
    bool found = false;
    for (const auto& e : weak.equations)
        if (e.poly.monic() == target && e.provenance.rfind("unitality", 0) == 0) found = true;
    CHECK(found);

    // The zero table violates ε(1 ▷ 1) = 1 with a nonzero constant.
    UnknownOp zero{TriangleOp<Polynomial>::filled(4, Polynomial(unknown.registry, Rational(0))), unknown.registry, {}};
    auto sys = generate_constraints(h, zero, Mode::relaxed);
    bool constant = false;
    for (const auto& e : sys.equations)
        if (e.poly.is_constant() && !e.poly.is_zero()) constant = true;
    CHECK(constant);
}

TEST_CASE("toy systems") {
    auto reg = make_registry();
    auto x = reg->add("x"), y = reg->add("y");
    auto P = [&](const char* t) { return Polynomial::parse(t, reg); };
    auto out = solve_polynomial_system({P("x*y"), P("x^2 - 1")}, {x, y});
    REQUIRE(out.branches.size() == 2);
    std::set<std::pair<std::string, std::string>> sols;
    for (const auto& b : out.branches) {
        CHECK(b.status == BranchStatus::resolved);
        sols.insert({b.assignments.at(x).to_string(), b.assignments.at(y).to_string()});
    }
    CHECK(sols == std::set<std::pair<std::string, std::string>>{{"1", "0"}, {"-1", "0"}});

    auto none = solve_polynomial_system({P("x^2 + 1")}, {x});
    REQUIRE(none.branches.size() == 1);
    CHECK(none.branches[0].status == BranchStatus::unresolved);
    CHECK(none.stats.unresolved == 1);

    auto inconsistent = solve_polynomial_system({P("x - 1"), P("x - 2")}, {x});
    CHECK(inconsistent.branches.empty());
    CHECK(inconsistent.stats.pruned == 1);

    auto free = solve_polynomial_system({P("x - 2*y")}, {x, y});
    REQUIRE(free.branches.size() == 1);
    CHECK(free.branches[0].free_vars == std::vector<VarId>{y});
    CHECK(free.branches[0].assignments.at(x) == P("2*y"));
}

TEST_CASE("solver limits are reported") {
    auto reg = make_registry();
    std::vector<VarId> vars;
    std::vector<Polynomial> eqs;
    for (int i = 0; i < 8; ++i) {
        vars.push_back(reg->add("x" + std::to_string(i)));
        eqs.push_back(Polynomial::parse("x" + std::to_string(i) + "^2 - x" + std::to_string(i), reg));
    }
    auto out = solve_polynomial_system(eqs, vars, SolverLimits{20, 64});
    CHECK(out.stats.limit_hit);
    auto full = solve_polynomial_system(eqs, vars);
    CHECK_FALSE(full.stats.limit_hit);
    CHECK(full.branches.size() == 256);
}

TEST_CASE("specialization and subsumption") {
    auto i_a = family_table(Family::i);
    auto i_3 = family_table(Family::i, Polynomial(Rational(3)));
    CHECK(specializes(i_a, i_3));
    CHECK_FALSE(specializes(i_3, i_a));
    auto kept = subsume({resolved_branch(i_a), resolved_branch(i_3)});
    REQUIRE(kept.size() == 1);
    CHECK(*kept[0].table == i_a);

    CHECK(subsume({resolved_branch(i_a), resolved_branch(family_table(Family::iii))}).size() == 2);
    CHECK(subsume({resolved_branch(family_table(Family::iv)), resolved_branch(family_table(Family::v))}).size() == 2);
    CHECK(subsume({resolved_branch(i_a), resolved_branch(i_a)}).size() == 1);

    // (ii) written with -a in place of a is the same family.
    auto ii = family_table(Family::ii);
    auto reg = registry_of(ii);
    auto flipped = ii.map<Polynomial>([&](const Polynomial& p) { return p.substitute(*reg->find("a"), Polynomial::parse("-a", reg)); });
    CHECK(same_family(ii, flipped));
    CHECK_FALSE(same_family(ii, family_table(Family::i)));
    CHECK_FALSE(same_family(i_a, i_3));
}

TEST_CASE("matching reports") {
    auto known = builtin_family_tables();
    REQUIRE(known.size() == 6);
    auto empty = match_families(std::vector<TriangleOp<Polynomial>>{}, known);
    CHECK(empty.unmatched_known.size() == 6);
    CHECK_FALSE(empty.bijection());
    auto self = match_families(known, known);
    CHECK(self.bijection());
    for (auto [f, k] : self.pairs) CHECK(f == k);
}

TEST_CASE("relaxed classification reproduces the six families") {
    const auto& r = runs().relaxed;
    CHECK(r.unresolved_count() == 0);
    CHECK_FALSE(r.stats.limit_hit);
    CHECK(r.maximal_families.size() == 6);
    auto m = match_families(r, builtin_family_tables());
    CHECK(m.bijection());
}

TEST_CASE("weak classification yields the unital families") {
    const auto& r = runs().weak;
    CHECK(r.unresolved_count() == 0);
    CHECK(r.maximal_families.size() == 3);
    CHECK(match_families(r, unital_families()).bijection());
}

TEST_CASE("full64 agrees with generator32") {
    const auto& a = runs().relaxed;
    const auto& b = runs().relaxed64;
    CHECK(b.unresolved_count() == 0);
    std::vector<TriangleOp<Polynomial>> fa, fb;
    for (const auto& x : a.maximal_families) fa.push_back(*x.table);
    for (const auto& x : b.maximal_families) fb.push_back(*x.table);
    CHECK(match_families(fa, fb).bijection());
}

TEST_CASE("resolved branches re-verify independently") {
    auto h = sweedler_h4();
    for (Mode mode : {Mode::relaxed, Mode::weak}) {
        auto unknown = build_unknown_op(h, Parameterization::generator32);
        auto sys = generate_constraints(h, unknown, mode);
        const auto& r = mode == Mode::relaxed ? runs().relaxed : runs().weak;
        std::size_t resolved = 0;
        for (const auto& b : r.branches) {
            if (b.status != BranchStatus::resolved) continue;
            ++resolved;
            std::map<VarId, Polynomial> values;
            for (const auto& [name, value] : b.assignments) values.emplace(*sys.registry->find(name), value);
            CHECK(values.size() == sys.unknowns.size());
            for (const auto& e : sys.equations) CHECK(e.poly.substitute(values).is_zero());
            auto hp = to_polynomial(h, registry_of(*b.table));
            CHECK(check_structure(hp, *b.table, mode).passed());
            CHECK(check_counit_absorption(hp, *b.table).passed());
        }
        CHECK(resolved > 0);
    }
}

TEST_CASE("every resolved branch has 1 ▷ 1 = 1 and g ▷ g in {1, g}") {
    for (const auto* r : {&runs().relaxed, &runs().weak, &runs().relaxed64})
        for (const auto& b : r->branches) {
            if (b.status != BranchStatus::resolved) continue;
            const auto& t = *b.table;
            std::vector<Polynomial> one{Rational(1), Rational(0), Rational(0), Rational(0)};
            std::vector<Polynomial> g{Rational(0), Rational(1), Rational(0), Rational(0)};
            CHECK(t.at(0, 0) == one);
            CHECK((t.at(1, 1) == one || t.at(1, 1) == g));
        }
}

TEST_CASE("classification output is deterministic") {
    auto a = canonical_dump(classification_to_json(runs().relaxed, Mode::relaxed, Parameterization::generator32));
    auto again = classify_h4(Mode::relaxed, Parameterization::generator32);
    CHECK(canonical_dump(classification_to_json(again, Mode::relaxed, Parameterization::generator32)) == a);
    auto j = json::parse(a);
    CHECK(j.at("families").size() == 6);
    CHECK(j.at("unresolved").empty());
    CHECK(j.at("mode") == "relaxed");
}

#include "posthopf/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace posthopf {

namespace {

bool is_scalar_array(const json& j) {
    for (const auto& e : j)
        if (e.is_array() || e.is_object()) return false;
    return true;
}

void dump_into(const json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += inner + json(key).dump() + ": ";
            dump_into(value, indent + 1, out);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (is_scalar_array(j)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += inner;
            dump_into(j[i], indent + 1, out);
        }
        out += "\n" + pad + "]";
    } else {
        out += j.dump();
    }
}

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("schema: " + what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) schema_error(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::string as_string(const json& j, const char* what) {
    if (!j.is_string()) schema_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

std::vector<Rational> rational_list(const json& j, std::size_t expected, const char* what) {
    if (!j.is_array() || j.size() != expected)
        schema_error(std::string(what) + " must be an array of length " + std::to_string(expected));
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(Rational::parse(as_string(e, what)));
    return out;
}

std::vector<Rational> rational_cube(const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) schema_error(std::string(what) + " has wrong outer size");
    std::vector<Rational> out;
    for (const auto& plane : j) {
        if (!plane.is_array() || plane.size() != n) schema_error(std::string(what) + " has wrong middle size");
        for (const auto& row : plane) {
            auto r = rational_list(row, n, what);
            out.insert(out.end(), r.begin(), r.end());
        }
    }
    return out;
}

template <class R, class F>
json cells_to_json(const TriangleOp<R>& op, F text) {
    json table = json::array();
    for (std::size_t i = 0; i < op.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < op.dim(); ++j) {
            json cell = json::array();
            for (const auto& c : op.at(i, j)) cell.push_back(text(c));
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    return table;
}

template <class R, class F>
TriangleOp<R> cells_from_json(const json& table, std::size_t n, F parse) {
    if (!table.is_array() || table.size() != n) schema_error("table must have dim rows");
    std::vector<Vec<R>> cells;
    for (const auto& row : table) {
        if (!row.is_array() || row.size() != n) schema_error("table rows must have dim cells");
        for (const auto& cell : row) {
            if (!cell.is_array() || cell.size() != n) schema_error("table cells must have dim entries");
            Vec<R> v;
            for (const auto& e : cell) v.push_back(parse(as_string(e, "table entry")));
            cells.push_back(std::move(v));
        }
    }
    return TriangleOp<R>(n, std::move(cells));
}

std::size_t read_dim(const json& j) {
    const auto& d = field(j, "dim");
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) schema_error("dim must be a positive integer");
    return d.get<std::size_t>();
}

}  // namespace

std::string canonical_dump(const json& j) {
    std::string out;
    dump_into(j, 0, out);
    out += "\n";
    return out;
}

json hopf_to_json(const HopfStructure& h) {
    const auto n = h.dim();
    auto list = [](const std::vector<Rational>& xs, std::size_t from, std::size_t count) {
        json a = json::array();
        for (std::size_t i = 0; i < count; ++i) a.push_back(xs[from + i].to_string());
        return a;
    };
    auto cube = [&](const std::vector<Rational>& t) {
        json a = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json plane = json::array();
            for (std::size_t j = 0; j < n; ++j) plane.push_back(list(t, (i * n + j) * n, n));
            a.push_back(std::move(plane));
        }
        return a;
    };
    json anti = json::array();
    for (std::size_t i = 0; i < n; ++i) anti.push_back(list(h.antipode_matrix(), i * n, n));
    return json{{"dim", n},
                {"basis", h.basis()},
                {"mul", cube(h.mul_tensor())},
                {"unit", list(h.unit(), 0, n)},
                {"comul", cube(h.comul_tensor())},
                {"counit", list(h.counit(), 0, n)},
                {"antipode", anti}};
}

HopfStructure hopf_from_json(const json& j) {
    const auto n = read_dim(j);
    const auto& basis_j = field(j, "basis");
    if (!basis_j.is_array() || basis_j.size() != n) schema_error("basis must list dim names");
    std::vector<std::string> basis;
    for (const auto& b : basis_j) basis.push_back(as_string(b, "basis name"));
    auto mul = rational_cube(field(j, "mul"), n, "mul");
    auto comul = rational_cube(field(j, "comul"), n, "comul");
    auto unit = rational_list(field(j, "unit"), n, "unit");
    auto counit = rational_list(field(j, "counit"), n, "counit");
    const auto& anti_j = field(j, "antipode");
    if (!anti_j.is_array() || anti_j.size() != n) schema_error("antipode must be dim x dim");
    std::vector<Rational> antipode;
    for (const auto& row : anti_j) {
        auto r = rational_list(row, n, "antipode");
        antipode.insert(antipode.end(), r.begin(), r.end());
    }
    return HopfStructure(std::move(basis), std::move(mul), std::move(unit), std::move(comul), std::move(counit),
                         std::move(antipode), Rational(0), Rational(1));
}

json op_to_json(const TriangleOp<Rational>& op) {
    return json{{"dim", op.dim()},
                {"ring", "rational"},
                {"table", cells_to_json(op, [](const Rational& r) { return r.to_string(); })}};
}

json op_to_json(const TriangleOp<Polynomial>& op) {
    return json{{"dim", op.dim()},
                {"ring", "poly"},
                {"table", cells_to_json(op, [](const Polynomial& p) { return p.to_string(); })}};
}

json op_to_json(const TriangleOp<PrimeFieldElement>& op) {
    std::uint32_t p = 0;
    for (const auto& c : op.cells())
        for (const auto& e : c) p = e.modulus();
    return json{{"dim", op.dim()},
                {"ring", json{{"prime", p}}},
                {"table", cells_to_json(op, [](const PrimeFieldElement& e) { return e.to_string(); })}};
}

TriangleOp<Polynomial> poly_op_from_json(const json& j, const RegistryPtr& registry) {
    const auto n = read_dim(j);
    return cells_from_json<Polynomial>(field(j, "table"), n,
                                       [&](const std::string& s) { return Polynomial::parse(s, registry); });
}

AnyOp op_from_json(const json& j, RegistryPtr registry) {
    const auto n = read_dim(j);
    const auto& ring = field(j, "ring");
    const auto& table = field(j, "table");
    if (ring.is_string() && ring.get<std::string>() == "rational")
        return cells_from_json<Rational>(table, n, [](const std::string& s) { return Rational::parse(s); });
    if (ring.is_string() && ring.get<std::string>() == "poly") {
        if (!registry) registry = make_registry();
        return poly_op_from_json(j, registry);
    }
    if (ring.is_object() && ring.contains("prime") && ring.at("prime").is_number_unsigned()) {
        auto p = ring.at("prime").get<std::uint32_t>();
        if (!is_odd_prime(p)) schema_error("prime ring needs an odd prime modulus");
        return cells_from_json<PrimeFieldElement>(table, n, [p](const std::string& s) {
            return PrimeFieldElement::from_rational(Rational::parse(s), p);
        });
    }
    schema_error("ring must be \"rational\", \"poly\" or {\"prime\": p}");
}

json report_to_json(const AxiomReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"axiom", f.axiom}, {"indices", f.indices}, {"residual", f.residual}});
    return json{{"passed", r.passed()}, {"checked", r.checked}, {"failures", failures}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace posthopf

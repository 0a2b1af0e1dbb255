#include "cobord/serialize.hpp"

#include "cobord/pairing.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

namespace cobord {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::runtime_error(where + ": " + what);
}

const Json& expect_object(const Json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    return j;
}

const Json& expect_array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    expect_object(j, where);
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

int int_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

Partition partition_from_json(const Json& j, const std::string& where) {
    expect_array(j, where);
    std::vector<int> parts;
    for (std::size_t i = 0; i < j.size(); ++i)
        parts.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    try {
        return Partition(std::move(parts));
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

Json to_json(const PartitionPair& p) {
    return Json{{"lambda", to_json(p.lambda)}, {"mu", to_json(p.mu)}};
}

PartitionPair pair_from_json(const Json& j, const std::string& where) {
    return {partition_from_json(field(j, "lambda", where), where + ".lambda"),
            partition_from_json(field(j, "mu", where), where + ".mu")};
}

Json to_json(const PartitionList& l) {
    Json m = Json::array();
    for (int v : l.m) m.push_back(v);
    return Json{{"lambda", to_json(l.lambda)}, {"m", std::move(m)}};
}

PartitionList list_from_json(const Json& j, const std::string& where) {
    PartitionList out;
    out.lambda = partition_from_json(field(j, "lambda", where), where + ".lambda");
    const Json& m = expect_array(field(j, "m", where), where + ".m");
    for (std::size_t i = 0; i < m.size(); ++i)
        out.m.push_back(int_from_json(m[i], where + ".m[" + std::to_string(i) + "]"));
    return out;
}

Json to_json(const MonomialIndex& q) {
    return Json{{"nu", to_json(q.nu())}, {"mu", to_json(q.mu())}};
}

MonomialIndex monomial_from_json(const Json& j, const std::string& where) {
    return {partition_from_json(field(j, "nu", where), where + ".nu"),
            partition_from_json(field(j, "mu", where), where + ".mu")};
}

Json to_json(const LinearForm& f) {
    Json j = Json::array();
    for (const Rational& c : f) j.push_back(to_json(c));
    return j;
}

LinearForm linear_form_from_json(const Json& j, const std::string& where) {
    expect_array(j, where);
    LinearForm f;
    for (std::size_t i = 0; i < j.size(); ++i)
        f.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return f;
}

Json to_json(const TruncatedPolynomial& p) {
    Json j = Json::array();
    std::vector<int> exps(static_cast<std::size_t>(p.ring()->generator_count()));
    for (const auto& [key, coeff] : p.terms()) {
        p.ring()->unpack(key, exps);
        Json e = Json::array();
        for (int v : exps) e.push_back(v);
        j.push_back(Json{{"exponents", std::move(e)}, {"coeff", to_json(coeff)}});
    }
    return j;
}

Json to_json(const GeneratorSpec& g) {
    Json base = Json::array();
    for (int b : g.space.base) base.push_back(b);
    Json levels = Json::array();
    for (const LinearForm& f : g.space.levels) levels.push_back(to_json(f));
    Json j{{"base", std::move(base)}, {"levels", std::move(levels)}};
    if (g.space.multiplier) j["multiplier"] = to_json(*g.space.multiplier);
    Json lines = Json::array();
    for (const LinearForm& f : g.lines) lines.push_back(to_json(f));
    j["lines"] = std::move(lines);
    return j;
}

GeneratorSpec generator_from_json(const Json& j, const std::string& where) {
    const Json& base_j = expect_array(field(j, "base", where), where + ".base");
    std::vector<int> base;
    for (std::size_t i = 0; i < base_j.size(); ++i) {
        int b = int_from_json(base_j[i], where + ".base[" + std::to_string(i) + "]");
        if (b < 0) fail(where + ".base[" + std::to_string(i) + "]", "negative factor dimension");
        base.push_back(b);
    }
    std::vector<LinearForm> levels;
    if (j.contains("levels")) {
        const Json& levels_j = expect_array(j["levels"], where + ".levels");
        for (std::size_t i = 0; i < levels_j.size(); ++i)
            levels.push_back(
                linear_form_from_json(levels_j[i], where + ".levels[" + std::to_string(i) + "]"));
    }
    std::optional<LinearForm> multiplier;
    if (j.contains("multiplier") && !j["multiplier"].is_null())
        multiplier = linear_form_from_json(j["multiplier"], where + ".multiplier");
    SpaceTower space;
    try {
        space = SpaceTower::make(std::move(base), std::move(levels), std::move(multiplier));
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
    std::vector<LinearForm> lines;
    const Json& lines_j = expect_array(field(j, "lines", where), where + ".lines");
    for (std::size_t i = 0; i < lines_j.size(); ++i) {
        LinearForm f = linear_form_from_json(lines_j[i], where + ".lines[" + std::to_string(i) + "]");
        if (static_cast<int>(f.size()) > space.ring->generator_count())
            fail(where + ".lines[" + std::to_string(i) + "]", "more coefficients than generators");
        f.resize(static_cast<std::size_t>(space.ring->generator_count()), Rational(0));
        lines.push_back(std::move(f));
    }
    return {std::move(space), std::move(lines)};
}

Json to_json(const ClassSpec& c) {
    Json terms = Json::array();
    for (const auto& [coeff, generator] : c.terms)
        terms.push_back(Json{{"coeff", to_json(coeff)}, {"generator", to_json(generator)}});
    return Json{{"n", c.n}, {"r", c.r}, {"terms", std::move(terms)}};
}

ClassSpec class_spec_from_json(const Json& j, const std::string& where) {
    ClassSpec c;
    c.n = int_from_json(field(j, "n", where), where + ".n");
    c.r = int_from_json(field(j, "r", where), where + ".r");
    if (c.n < 0 || c.r < 0) fail(where, "n and r must be non-negative");
    const Json& terms = expect_array(field(j, "terms", where), where + ".terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string t = where + ".terms[" + std::to_string(i) + "]";
        Rational coeff = rational_from_json(field(terms[i], "coeff", t), t + ".coeff");
        GeneratorSpec g = generator_from_json(field(terms[i], "generator", t), t + ".generator");
        try {
            c.add(std::move(coeff), std::move(g));
        } catch (const std::exception& e) {
            fail(t, e.what());
        }
    }
    return c;
}

Json to_json(const ChernVector& v) {
    Json order = Json::array();
    for (const MonomialIndex& q : enumerate_monomials(v.n, v.r)) order.push_back(to_json(q));
    Json values = Json::array();
    for (const Rational& x : v.values) values.push_back(to_json(x));
    return Json{{"order", std::move(order)}, {"values", std::move(values)}};
}

Json to_json(const PairingMatrix& m) {
    Json index = Json::array();
    for (const MonomialIndex& q : m.index) index.push_back(to_json(q));
    Json rows = Json::array();
    for (const auto& row : m.rows) {
        Json r = Json::array();
        for (const Rational& v : row) r.push_back(to_json(v));
        rows.push_back(std::move(r));
    }
    return Json{{"n", m.n}, {"r", m.r}, {"index", std::move(index)}, {"rows", std::move(rows)}};
}

PairingMatrix matrix_from_json(const Json& j, const std::string& where) {
    PairingMatrix m;
    m.n = int_from_json(field(j, "n", where), where + ".n");
    m.r = int_from_json(field(j, "r", where), where + ".r");
    const Json& index = expect_array(field(j, "index", where), where + ".index");
    for (std::size_t i = 0; i < index.size(); ++i)
        m.index.push_back(monomial_from_json(index[i], where + ".index[" + std::to_string(i) + "]"));
    const Json& rows = expect_array(field(j, "rows", where), where + ".rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string w = where + ".rows[" + std::to_string(i) + "]";
        const Json& row = expect_array(rows[i], w);
        if (row.size() != m.index.size()) fail(w, "row length does not match index length");
        std::vector<Rational> out;
        for (std::size_t k = 0; k < row.size(); ++k)
            out.push_back(rational_from_json(row[k], w + "[" + std::to_string(k) + "]"));
        m.rows.push_back(std::move(out));
    }
    if (m.rows.size() != m.index.size()) fail(where, "matrix is not square over its index");
    return m;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::create_directories(path.parent_path());
    thread_local std::mt19937_64 rng(std::random_device{}());
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(rng());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace cobord

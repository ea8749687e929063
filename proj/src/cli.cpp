#include "gkm/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gkm/abbv.hpp"
#include "gkm/canonical.hpp"
#include "gkm/charclasses.hpp"
#include "gkm/classes.hpp"
#include "gkm/graph.hpp"
#include "gkm/parallel.hpp"
#include "gkm/spaces.hpp"
#include "json.hpp"

namespace gkm {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::string output;
    std::uint64_t seed = 1729;
    int threads = 0;
    int fuzz = 0;
    std::string index;
    bool ordinary = false;
    std::string decoration = "none";
    bool bar = false;
    std::string space;
    std::string file;
    std::string a;
    std::string b;
    int k = -1;
    int n = -1;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    std::string list;
    for (const char* f : allowed) list += list.empty() ? f : std::string(", ") + f;
    throw UsageError("format '" + o.format + "' is not available here (use " + list + ")");
}

SpaceId space_arg(const Options& o) {
    try {
        return SpaceId::parse(o.space);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// one class, or every class of a basis document
std::vector<std::pair<std::string, EquivCohClass>> read_classes(const std::string& path, const SpaceId& s) {
    nlohmann::json j = read_json(path);
    std::vector<std::pair<std::string, EquivCohClass>> out;
    auto load = [&](const nlohmann::json& item, std::string label) {
        EquivCohClass c;
        try {
            c = class_from_json(item);
        } catch (const std::exception& e) {
            throw UsageError(path + ": " + e.what());
        }
        if (c.space != s) throw UsageError(path + ": class lives on " + c.space.str() + ", not " + s.str());
        if (item.contains("label")) label = item.at("label").get<std::string>();
        out.emplace_back(std::move(label), std::move(c));
    };
    if (j.is_object() && j.value("schema", "") == "gkm.basis/1") {
        if (!j.contains("classes") || !j.at("classes").is_array()) throw UsageError(path + ": basis without 'classes'");
        std::size_t i = 0;
        for (const auto& item : j.at("classes")) load(item, "#" + std::to_string(i++));
    } else {
        load(j, "class");
    }
    return out;
}

std::vector<int> parse_index(const std::string& text) {
    std::vector<int> out;
    std::string t;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') t += ch;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw UsageError("invalid monomial index '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw UsageError("invalid monomial index '" + text + "'");
        }
        if (used != part.size() || v < 0) throw UsageError("invalid monomial index '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("invalid monomial index '" + text + "'");
    return out;
}

std::string index_str(const std::vector<int>& I) {
    std::string s = "(";
    for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
    return s + ")";
}

std::string rat_str(const Rational& r) { return r.get_str(); }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

ojson violations_json(const VerifyReport& r, const SpaceId& s) {
    auto pts = fixed_points(s);
    ojson arr = ojson::array();
    for (const auto& v : r.violations) {
        ojson j;
        j["edge"] = v.edge >= 0 ? ojson(v.edge) : ojson(nullptr);
        j["vertex"] = v.vertex >= 0 ? ojson(pts[v.vertex].label()) : ojson(nullptr);
        j["other"] = v.other >= 0 ? ojson(pts[v.other].label()) : ojson(nullptr);
        j["part"] = std::string(1, v.part);
        j["modulus"] = v.modulus.nvars() ? ojson(v.modulus.str()) : ojson(nullptr);
        j["what"] = v.what;
        arr.push_back(j);
    }
    return arr;
}

// ---- subcommands ----

int cmd_graph(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "dot", "csv"});
    SpaceId s = space_arg(o);
    const GkmGraph& g = graph_of(s);
    if (o.format == "dot") {
        out << export_dot(g);
    } else if (o.format == "json") {
        out << graph_json(g);
    } else if (o.format == "csv") {
        out << "edge,from,to,weight,kind\n";
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto& ed = g.edges[e];
            out << e << "," << csv_quote(g.vertices[ed.a].label()) << ","
                << (ed.two_ended() ? csv_quote(g.vertices[ed.b].label()) : "") << "," << ed.weight.str() << ","
                << edge_kind_name(ed.kind) << "\n";
        }
    } else {
        out << "space " << s.str() << " " << family_name(s.family) << " dim " << dimension(s) << "\n";
        out << "vertices " << g.vertices.size() << " edges " << g.edges.size() << " squares " << g.square_count()
            << "\n";
        for (const auto& v : g.vertices) out << "  " << v.label() << "\n";
        for (const auto& ed : g.edges)
            out << "  " << g.vertices[ed.a].label() << " -- "
                << (ed.two_ended() ? g.vertices[ed.b].label() : std::string("*")) << "  " << ed.weight.str() << "  "
                << edge_kind_name(ed.kind) << "\n";
    }
    return 0;
}

int verify_fuzz(const Options& o, const SpaceId& s, std::ostream& out) {
    const CanonicalBasis& b = canonical_basis(s);
    std::mt19937_64 rng(o.seed);
    long valid_fail = 0, perturbed_pass = 0;
    for (int i = 0; i < o.fuzz; ++i) {
        EquivCohClass c = random_class(b, rng);
        if (!verify_class(c).ok) ++valid_fail;
        if (verify_class(perturb_vertex(c, rng)).ok) ++perturbed_pass;
    }
    bool ok = valid_fail == 0 && perturbed_pass == 0;
    if (o.format == "json") {
        ojson j;
        j["schema"] = "gkm.fuzz/1";
        j["space"] = s.str();
        j["seed"] = o.seed;
        j["trials"] = o.fuzz;
        j["valid_rejected"] = valid_fail;
        j["perturbed_accepted"] = perturbed_pass;
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << (ok ? "ok" : "FAIL") << " " << s.str() << " trials " << o.fuzz << " seed " << o.seed
            << " valid_rejected " << valid_fail << " perturbed_accepted " << perturbed_pass << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    SpaceId s = space_arg(o);
    if (o.fuzz > 0) return verify_fuzz(o, s, out);
    if (o.file.empty()) throw UsageError("verify needs a class file or --fuzz N");
    auto classes = read_classes(o.file, s);
    bool all = true;
    ojson arr = ojson::array();
    std::ostringstream text;
    for (const auto& [label, c] : classes) {
        VerifyReport r = verify_class(c);
        all = all && r.ok;
        ojson j;
        j["label"] = label;
        j["ok"] = r.ok;
        j["violations"] = violations_json(r, s);
        arr.push_back(j);
        text << (r.ok ? "ok   " : "FAIL ") << label << "\n";
        for (const auto& v : r.violations) text << "  " << v.what << "\n";
    }
    // failures are always reported as JSON so they can be parsed
    if (o.format == "json" || !all) {
        ojson j;
        j["schema"] = "gkm.verify/1";
        j["space"] = s.str();
        j["ok"] = all;
        j["classes"] = arr;
        out << j.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return all ? 0 : 1;
}

ojson basis_json(const CanonicalBasis& b) {
    ojson j;
    j["schema"] = "gkm.basis/1";
    j["space"] = b.space.str();
    j["classes"] = ojson::array();
    for (const auto& e : b.elements) {
        ojson c;
        c["label"] = e.label;
        c["degree"] = e.degree;
        ojson cls = class_to_json(e.cls);
        for (auto& [key, val] : cls.items()) c[key] = val;
        j["classes"].push_back(c);
    }
    return j;
}

int cmd_canonical(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    SpaceId s = space_arg(o);
    const CanonicalBasis& b = canonical_basis(s);
    if (o.format == "json") {
        out << basis_json(b).dump(2) << "\n";
        return 0;
    }
    auto pts = fixed_points(s);
    for (const auto& e : b.elements) {
        out << e.label << "  degree " << e.degree << "\n";
        for (std::size_t v = 0; v < pts.size(); ++v) {
            bool theta = !e.cls.g.empty() && !e.cls.g[v].is_zero();
            if (e.cls.f[v].is_zero() && !theta) continue;
            out << "  " << pts[v].label() << ": ";
            if (!e.cls.f[v].is_zero() || !theta) out << e.cls.f[v].str();
            if (theta) out << (e.cls.f[v].is_zero() ? "" : " + ") << "(" << e.cls.g[v].str() << ")*theta";
            out << "\n";
        }
    }
    return 0;
}

void emit_coefficients(const Options& o, const CanonicalBasis& b, const std::vector<Polynomial>& coef,
                       std::ostream& out, const std::string& schema) {
    auto str = [&](const Polynomial& p) { return o.ordinary ? rat_str(p.constant_term()) : p.str(); };
    if (o.format == "json") {
        ojson j;
        j["schema"] = schema;
        j["space"] = b.space.str();
        j["ordinary"] = o.ordinary;
        j["coefficients"] = ojson::array();
        for (std::size_t i = 0; i < coef.size(); ++i) {
            ojson c;
            c["label"] = b.elements[i].label;
            c["coefficient"] = str(coef[i]);
            j["coefficients"].push_back(c);
        }
        out << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "label,coefficient\n";
        for (std::size_t i = 0; i < coef.size(); ++i) out << b.elements[i].label << "," << str(coef[i]) << "\n";
    } else {
        bool any = false;
        for (std::size_t i = 0; i < coef.size(); ++i) {
            std::string v = str(coef[i]);
            if (v == "0") continue;
            out << b.elements[i].label << ": " << v << "\n";
            any = true;
        }
        if (!any) out << "0\n";
    }
}

int cmd_expand(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "csv"});
    SpaceId s = space_arg(o);
    auto classes = read_classes(o.file, s);
    if (classes.size() != 1) throw UsageError("expand takes a single class");
    const CanonicalBasis& b = canonical_basis(s);
    emit_coefficients(o, b, expand_in_canonical(classes[0].second, b), out, "gkm.expansion/1");
    return 0;
}

int cmd_lr(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "csv"});
    SpaceId s = space_arg(o);
    const CanonicalBasis& b = canonical_basis(s);
    auto lookup = [&](const std::string& l) {
        try {
            return find_element(b, l);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    };
    if (!o.a.empty() || !o.b.empty()) {
        if (o.a.empty() || o.b.empty()) throw UsageError("lr needs two basis labels or none");
        emit_coefficients(o, b, lr_coefficients(b, lookup(o.a), lookup(o.b)), out, "gkm.lr/1");
        return 0;
    }
    // full table over the plain classes
    std::size_t q = b.plain_count;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i; j < q; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<Polynomial>> res(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t t) { res[t] = lr_coefficients(b, pairs[t].first, pairs[t].second); });
    auto str = [&](const Polynomial& p) { return o.ordinary ? rat_str(p.constant_term()) : p.str(); };
    if (o.format == "json") {
        ojson j;
        j["schema"] = "gkm.lr/1";
        j["space"] = s.str();
        j["ordinary"] = o.ordinary;
        j["products"] = ojson::array();
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            ojson p;
            p["a"] = b.elements[pairs[t].first].label;
            p["b"] = b.elements[pairs[t].second].label;
            p["terms"] = ojson::array();
            for (std::size_t c = 0; c < res[t].size(); ++c) {
                std::string v = str(res[t][c]);
                if (v == "0") continue;
                p["terms"].push_back({{"label", b.elements[c].label}, {"coefficient", v}});
            }
            j["products"].push_back(p);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (o.format == "csv") out << "a,b,c,coefficient\n";
    for (std::size_t t = 0; t < pairs.size(); ++t)
        for (std::size_t c = 0; c < res[t].size(); ++c) {
            std::string v = str(res[t][c]);
            if (v == "0") continue;
            const auto& la = b.elements[pairs[t].first].label;
            const auto& lb = b.elements[pairs[t].second].label;
            if (o.format == "csv")
                out << la << "," << lb << "," << b.elements[c].label << "," << v << "\n";
            else
                out << la << " * " << lb << " -> " << b.elements[c].label << ": " << v << "\n";
        }
    return 0;
}

int cmd_matrices(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "csv"});
    SpaceId s = space_arg(o);
    const CanonicalBasis& b = canonical_basis(s);
    CharMatrices cm = char_canonical_matrices(s);
    std::vector<std::string> rows, cols;
    for (const auto& m : cm.rows) rows.push_back(m.str(s));
    for (std::size_t c = 0; c < b.plain_count; ++c) cols.push_back(b.elements[c].label);
    auto grid = [](const PolyMatrix& m) {
        ojson a = ojson::array();
        for (const auto& r : m) {
            ojson row = ojson::array();
            for (const auto& x : r) row.push_back(x.str());
            a.push_back(row);
        }
        return a;
    };
    if (o.format == "json") {
        ojson j;
        j["schema"] = "gkm.matrices/1";
        j["space"] = s.str();
        j["monomials"] = rows;
        j["canonical"] = cols;
        j["K"] = grid(cm.K);
        j["Kbar"] = grid(cm.Kbar);
        out << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "matrix,row,column,entry\n";
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                out << "K," << rows[r] << "," << cols[c] << "," << cm.K[r][c].str() << "\n";
        for (std::size_t r = 0; r < cols.size(); ++r)
            for (std::size_t c = 0; c < rows.size(); ++c)
                out << "Kbar," << cols[r] << "," << rows[c] << "," << cm.Kbar[r][c].str() << "\n";
    } else {
        out << "K (rows: monomials, columns: canonical classes)\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out << "  " << rows[r] << ":";
            for (const auto& x : cm.K[r]) out << "  " << x.str();
            out << "\n";
        }
        out << "Kbar (rows: canonical classes, columns: monomials)\n";
        for (std::size_t r = 0; r < cols.size(); ++r) {
            out << "  " << cols[r] << ":";
            for (const auto& x : cm.Kbar[r]) out << "  " << x.str();
            out << "\n";
        }
    }
    return 0;
}

int cmd_relations(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    SpaceId s = space_arg(o);
    RelationReport r = verify_relations(s);
    if (o.format == "json" || !r.ok) {
        ojson j;
        j["schema"] = "gkm.relations/1";
        j["space"] = s.str();
        j["ok"] = r.ok;
        j["checks"] = ojson::array();
        for (const auto& c : r.checks) {
            ojson x;
            x["name"] = c.name;
            x["ok"] = c.ok;
            if (!c.detail.empty()) x["detail"] = c.detail;
            j["checks"].push_back(x);
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : r.checks) out << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";
    }
    return r.ok ? 0 : 1;
}

int cmd_poincare(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "csv"});
    SpaceId s = space_arg(o);
    auto p = poincare_series(s);
    if (o.format == "json") {
        ojson j;
        j["schema"] = "gkm.poincare/1";
        j["space"] = s.str();
        j["dimension"] = dimension(s);
        j["coefficients"] = p;
        j["series"] = series_str(p);
        out << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "degree,betti\n";
        for (std::size_t i = 0; i < p.size(); ++i) out << i << "," << p[i] << "\n";
    } else {
        out << series_str(p) << "\n";
    }
    return 0;
}

void emit_integral(const Options& o, const SpaceId& s, const std::string& what, const IntegralResult& r,
                   std::ostream& out) {
    if (o.format == "json") {
        ojson j;
        j["schema"] = "gkm.integral/1";
        j["space"] = s.str();
        j["integrand"] = what;
        j["value"] = r.value.str();
        j["degree_class"] = degree_class_name(r.degree_class);
        out << j.dump(2) << "\n";
    } else {
        out << r.value.str() << "\n";
    }
}

int cmd_integrate(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    SpaceId s = space_arg(o);
    if (!s.orientable()) throw UsageError(s.str() + " is not orientable");
    auto classes = read_classes(o.file, s);
    if (classes.size() != 1) throw UsageError("integrate takes a single class");
    VerifyReport vr = verify_class(classes[0].second);
    if (!vr.ok) {
        ojson j;
        j["schema"] = "gkm.verify/1";
        j["space"] = s.str();
        j["ok"] = false;
        j["classes"] = ojson::array({{{"label", classes[0].first}, {"ok", false}, {"violations", violations_json(vr, s)}}});
        out << j.dump(2) << "\n";
        return 1;
    }
    emit_integral(o, s, classes[0].first, integrate(classes[0].second), out);
    return 0;
}

CharMonomial monomial_arg(const Options& o, const SpaceId& s, const std::vector<int>& I) {
    CharMonomial m;
    try {
        m.decor = parse_decor(o.decoration);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    m.bar = o.bar;
    int rank = o.bar ? s.n - s.k : s.k;
    if (static_cast<int>(I.size()) > std::max(rank, 1))
        throw UsageError("invalid monomial index " + index_str(I) + ": at most " + std::to_string(rank) + " entries");
    m.exps = I;
    return m;
}

int cmd_charnum(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "csv"});
    SpaceId s = space_arg(o);
    if (!s.orientable()) throw UsageError(s.str() + " is not orientable");
    std::vector<CharMonomial> monos;
    if (!o.index.empty()) {
        monos.push_back(monomial_arg(o, s, parse_index(o.index)));
    } else {
        CharMonomial probe = monomial_arg(o, s, {});
        int rank = o.bar ? s.n - s.k : s.k;
        int unit = s.complex() ? 2 : 4;
        int room = dimension(s) - probe.degree(s);
        for (const auto& I : bounded_exponents(rank, std::max(room / unit, 0))) {
            CharMonomial m = probe;
            m.exps = I;
            int d = m.degree(s);
            if (d > dimension(s) || (o.ordinary && d != dimension(s))) continue;
            monos.push_back(m);
        }
    }
    std::vector<CharNumber> res(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
        try {
            res[i] = characteristic_number(s, monos[i]);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    bool numeric = true;
    for (const auto& r : res) numeric = numeric && r.numeric_ok;
    auto value = [&](const CharNumber& r) {
        return o.ordinary ? rat_str(r.ordinary) : r.integral.value.str();
    };
    if (o.format == "json") {
        ojson j;
        j["schema"] = "gkm.charnum/1";
        j["space"] = s.str();
        j["ordinary"] = o.ordinary;
        j["numbers"] = ojson::array();
        for (const auto& r : res) {
            ojson x;
            x["index"] = r.monomial.exps;
            x["monomial"] = r.monomial.str(s);
            x["value"] = value(r);
            x["degree_class"] = degree_class_name(r.integral.degree_class);
            x["numeric_check"] = r.numeric_ok;
            j["numbers"].push_back(x);
        }
        out << j.dump(2) << "\n";
    } else if (o.format == "csv" || res.size() != 1) {
        out << "index,monomial,value,degree_class\n";
        for (const auto& r : res)
            out << csv_quote(index_str(r.monomial.exps)) << "," << r.monomial.str(s) << "," << value(r) << ","
                << degree_class_name(r.integral.degree_class) << "\n";
    } else {
        out << value(res[0]) << "\n";
    }
    return numeric ? 0 : 1;
}

int cmd_factor2(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json", "csv"});
    if (o.k < 0 || o.n < 1 || o.k > o.n) throw UsageError("factor2 needs 0 <= k <= n and n >= 1");
    std::vector<std::vector<int>> indices;
    if (!o.index.empty()) {
        auto I = parse_index(o.index);
        if (static_cast<int>(I.size()) > std::max(o.k, 1)) throw UsageError("invalid monomial index " + index_str(I));
        indices.push_back(I);
    } else {
        indices = bounded_exponents(o.k, o.k * (o.n - o.k) + 2);
        std::vector<std::vector<int>> keep;
        for (const auto& I : indices) {
            int w = 0;
            for (std::size_t l = 0; l < I.size(); ++l) w += int(l + 1) * I[l];
            if (w <= o.k * (o.n - o.k) + 2) keep.push_back(I);
        }
        indices = keep;
    }
    std::vector<Factor2Report> reps;
    for (const auto& I : indices) reps.push_back(factor2_report(o.k, o.n, I));
    bool ok = true;
    for (const auto& r : reps) ok = ok && r.ok;
    if (o.format == "json") {
        ojson j;
        j["schema"] = "gkm.factor2/1";
        j["k"] = o.k;
        j["n"] = o.n;
        j["ok"] = ok;
        j["reports"] = ojson::array();
        for (const auto& r : reps) {
            ojson x;
            x["index"] = r.index;
            x["closed_sum"] = r.closed_sum.str();
            x["ok"] = r.ok;
            x["values"] = ojson::array();
            for (std::size_t i = 0; i < r.names.size(); ++i)
                x["values"].push_back({{"integral", r.names[i]}, {"value", r.values[i].str()}});
            j["reports"].push_back(x);
        }
        out << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "index,integral,value,closed_sum,ok\n";
        for (const auto& r : reps)
            for (std::size_t i = 0; i < r.names.size(); ++i)
                out << csv_quote(index_str(r.index)) << "," << r.names[i] << "," << r.values[i].str() << ","
                    << r.closed_sum.str() << "," << (r.values[i] == r.closed_sum ? "true" : "false") << "\n";
    } else {
        for (const auto& r : reps) out << (r.ok ? "ok   " : "FAIL ") << index_str(r.index) << "  " << r.closed_sum.str() << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_formality(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    SpaceId s = space_arg(o);
    FormalityReport r = check_formality(s);
    if (o.format == "json") {
        ojson j;
        j["schema"] = "gkm.formality/1";
        j["space"] = s.str();
        j["fixed_cohomology"] = r.fixed_cohomology;
        j["total_betti"] = r.total_betti;
        j["poincare_at_one"] = r.poincare_at_one;
        j["ok"] = r.ok;
        out << j.dump(2) << "\n";
    } else {
        out << (r.ok ? "ok" : "FAIL") << " fixed " << r.fixed_cohomology << " betti " << r.total_betti << " P(1) "
            << r.poincare_at_one << "\n";
    }
    return r.ok ? 0 : 1;
}

std::string output_path(const std::string& p) {
    namespace fs = std::filesystem;
    fs::path path(p);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("GKM_OUTPUT_DIR"); dir && *dir) path = fs::path(dir) / path;
    }
    return path.string();
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"GKM graphs, canonical classes and characteristic numbers of Grassmannians", "gkmtool"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "text, json, csv or dot (graph only)")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("-o,--output", o.output, "write to a file; relative paths land in $GKM_OUTPUT_DIR");
    app.add_option("--threads", o.threads, "worker threads (default 1)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", o.seed, "seed for --fuzz");

    auto sub = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->fallthrough();
        return c;
    };
    const char* space_help = "C(k,n), R(K,N) or OR(K,N)";

    auto* graph = sub("graph", "GKM graph of a space");
    graph->add_option("space", o.space, space_help)->required();

    auto* verify = sub("verify", "check the congruences of a class or basis file");
    verify->add_option("space", o.space, space_help)->required();
    verify->add_option("file", o.file, "class or basis JSON");
    verify->add_option("--fuzz", o.fuzz, "random valid and perturbed classes instead of a file")
        ->check(CLI::NonNegativeNumber);

    auto* canonical = sub("canonical", "canonical basis");
    canonical->add_option("space", o.space, space_help)->required();

    auto* expand = sub("expand", "coefficients of a class in the canonical basis");
    expand->add_option("space", o.space, space_help)->required();
    expand->add_option("file", o.file, "class JSON")->required();
    expand->add_flag("--ordinary", o.ordinary, "constant terms only");

    auto* lr = sub("lr", "structure constants of the canonical basis");
    lr->add_option("space", o.space, space_help)->required();
    lr->add_option("a", o.a, "basis label or subset such as {1,3}");
    lr->add_option("b", o.b, "basis label or subset");
    lr->add_flag("--ordinary", o.ordinary, "constant terms only");

    auto* matrices = sub("matrices", "characteristic monomials against canonical classes");
    matrices->add_option("space", o.space, space_help)->required();

    auto* relations = sub("relations", "ring relations among characteristic classes");
    relations->add_option("space", o.space, space_help)->required();

    auto* poincare = sub("poincare", "Poincare series");
    poincare->add_option("space", o.space, space_help)->required();

    auto* integrate_cmd = sub("integrate", "equivariant integral of a class");
    integrate_cmd->add_option("space", o.space, space_help)->required();
    integrate_cmd->add_option("file", o.file, "class JSON")->required();

    auto* charnum = sub("charnum", "characteristic numbers");
    charnum->add_option("space", o.space, space_help)->required();
    charnum->add_option("--index", o.index, "exponents of c_1.. or p_1.., e.g. 1,0");
    charnum->add_option("--decoration", o.decoration, "none, e, ebar, r or rt");
    charnum->add_flag("--bar", o.bar, "use the complementary bundle");
    charnum->add_flag("--ordinary", o.ordinary, "ordinary number (constant term)");

    auto* factor2 = sub("factor2", "six-way equality of Pontryagin numbers");
    factor2->add_option("k", o.k, "k")->required();
    factor2->add_option("n", o.n, "n")->required();
    factor2->add_option("--index", o.index, "exponents of p_1..p_k; all indices up to k(n-k)+2 when omitted");

    auto* formality = sub("formality", "fixed-point cohomology against total Betti number");
    formality->add_option("space", o.space, space_help)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    set_threads(o.threads);
    std::ostringstream buf;
    int code = 0;
    try {
        if (o.format == "dot" && !graph->parsed()) throw UsageError("dot output is only available for graph");
        if (graph->parsed()) code = cmd_graph(o, buf);
        else if (verify->parsed()) code = cmd_verify(o, buf);
        else if (canonical->parsed()) code = cmd_canonical(o, buf);
        else if (expand->parsed()) code = cmd_expand(o, buf);
        else if (lr->parsed()) code = cmd_lr(o, buf);
        else if (matrices->parsed()) code = cmd_matrices(o, buf);
        else if (relations->parsed()) code = cmd_relations(o, buf);
        else if (poincare->parsed()) code = cmd_poincare(o, buf);
        else if (integrate_cmd->parsed()) code = cmd_integrate(o, buf);
        else if (charnum->parsed()) code = cmd_charnum(o, buf);
        else if (factor2->parsed()) code = cmd_factor2(o, buf);
        else if (formality->parsed()) code = cmd_formality(o, buf);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        ojson j;
        j["schema"] = "gkm.error/1";
        j["ok"] = false;
        j["error"] = e.what();
        out << j.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (o.output.empty()) {
        out << buf.str();
    } else {
        std::string path = output_path(o.output);
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << path << "\n";
            return 2;
        }
        f << buf.str();
        // verification failures still show up on stdout
        if (code == 1) out << buf.str();
    }
    return code;
}

}  // namespace gkm

#include "tropid/serialize.hpp"

#include <cctype>
#include <limits>

#include "tropid/error.hpp"
#include "tropid/families.hpp"

namespace tropid {

namespace {

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Integer integer_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<long>::max()))
            return Integer(std::to_string(u));
        return Integer(static_cast<long>(u));
    }
    if (j.is_string()) {
        const Rational r = parse_rational(j.get<std::string>());
        if (r.get_den() != 1) throw ParseError(std::string(what) + " must be an integer");
        return r.get_num();
    }
    throw ParseError(std::string(what) + " must be an integer");
}

std::int64_t int64_from_json(const Json& j, const char* what) {
    const Integer v = integer_from_json(j, what);
    if (!v.fits_slong_p()) throw ParseError(std::string(what) + " is out of range");
    return v.get_si();
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

Letter letter_from_key(const std::string& key) {
    if (key.size() != 1 || !std::isalpha(static_cast<unsigned char>(key[0])))
        throw ParseError("assignment key \"" + key + "\" is not a single letter");
    return key[0];
}

template <class T, class Read>
std::map<Letter, T> read_assignment(const Json& doc, Read read) {
    const Json& j = doc.is_object() && doc.contains("assignment") ? doc.at("assignment") : doc;
    std::map<Letter, T> out;
    auto put = [&](Letter c, const Json& v) {
        if (!out.emplace(c, read(v)).second) throw ParseError(std::string("letter '") + c + "' assigned twice");
    };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) put(letter_from_key(key), value);
    } else if (j.is_array()) {
        for (const Json& entry : j) {
            if (!entry.is_object()) throw ParseError("assignment entries must be objects");
            const Json& letter = field(entry, "letter");
            if (!letter.is_string()) throw ParseError("\"letter\" must be a string");
            put(letter_from_key(letter.get<std::string>()), field(entry, "value"));
        }
    } else {
        throw ParseError("assignment must be an object or an array");
    }
    return out;
}

Json point_json(const VariableSet& vars, const RationalPoint& point) {
    Json out = Json::object();
    for (std::size_t i = 0; i < vars.size(); ++i) out[vars.name(i)] = to_string(point[i]);
    return out;
}

} // namespace

Json to_json(const TropScalar& value) { return to_string(value); }

TropScalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) return TropScalar(Rational(integer_from_json(j, "entry")));
    if (j.is_null()) return TropScalar::bottom();
    throw ParseError("scalar must be a string such as \"-inf\" or \"3/2\", or an integer");
}

Json to_json(const TropMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

TropMatrix matrix_from_json(const Json& j, const PosetPtr& index) {
    const std::size_t n = index->size();
    if (!j.is_array() || j.size() != n) throw ParseError("matrix must have " + std::to_string(n) + " rows");
    TropMatrix m(index);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw ParseError("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

Json to_json(const Poset& poset) {
    Json leq = Json::array();
    for (auto [a, b] : poset.strict_pairs()) leq.push_back(Json::array({poset.label(a), poset.label(b)}));
    return Json{{"elements", poset.labels()}, {"leq", std::move(leq)}};
}

Poset poset_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("poset must be a JSON object");
    const Json& elements = field(j, "elements");
    if (!elements.is_array()) throw ParseError("\"elements\" must be an array");
    std::vector<std::string> labels;
    for (const Json& e : elements) {
        if (e.is_string()) labels.push_back(e.get<std::string>());
        else if (e.is_number_integer()) labels.push_back(std::to_string(e.get<std::int64_t>()));
        else throw ParseError("poset elements must be strings or integers");
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (auto it = j.find("leq"); it != j.end()) {
        if (!it->is_array()) throw ParseError("\"leq\" must be an array of pairs");
        for (const Json& p : *it) {
            if (!p.is_array() || p.size() != 2) throw ParseError("\"leq\" entries must be pairs");
            auto label = [](const Json& e) {
                if (e.is_string()) return e.get<std::string>();
                if (e.is_number_integer()) return std::to_string(e.get<std::int64_t>());
                throw ParseError("\"leq\" entries must name elements");
            };
            pairs.emplace_back(label(p[0]), label(p[1]));
        }
    }
    return Poset::from_relation(std::move(labels), pairs);
}

Json to_json(const Bicyclic& x) { return Json{{"i", integer_json(x.i)}, {"j", integer_json(x.j)}}; }

Json to_json(const Fmim& x) { return Json{{"i", x.i()}, {"j", x.j()}, {"k", x.k()}}; }

Json to_json(const TropPoly& f) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : f.terms()) {
        Json exps = Json::object();
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i]) exps[f.variables().name(i)] = mono[i];
        terms.push_back(Json{{"coefficient", to_string(coeff)}, {"exponents", std::move(exps)}});
    }
    return Json{{"text", to_string(f)}, {"variables", f.variables().names()}, {"terms", std::move(terms)}};
}

Json to_json(const Witness& w) {
    Json out{{"model", model_name(w.model)}};
    std::visit(
        [&](const auto& data) {
            Json assignment = Json::object();
            for (const auto& [letter, value] : data.assignment) assignment[std::string(1, letter)] = to_json(value);
            out["assignment"] = std::move(assignment);
            out["left"] = to_json(data.left);
            out["right"] = to_json(data.right);
            if constexpr (std::is_same_v<std::decay_t<decltype(data)>, MatrixWitness>) {
                if (data.coordinate) {
                    const auto [i, k] = *data.coordinate;
                    out["index"] = data.left.index().labels();
                    out["coordinate"] = Json::array({i + 1, k + 1});
                }
            }
        },
        w.data);
    return out;
}

Json to_json(const Verdict& v, const std::optional<Witness>& witness) {
    Json out{{"result", v.holds ? "holds" : "fails"},
             {"n", v.n},
             {"method", method_name(v.method)},
             {"comparisons", v.comparisons}};
    if (!v.failure) return out;
    const Failure& f = *v.failure;
    if (f.family == Failure::Family::Path) {
        out["failing_u"] = f.u.str();
        out["path"] = f.path;
    } else {
        out["failing_letter"] = std::string(1, f.letter);
    }
    out["point"] = point_json(*f.variables, f.point);
    out["left_value"] = to_json(f.left_value);
    out["right_value"] = to_json(f.right_value);
    out["left_poly"] = f.left_poly;
    out["right_poly"] = f.right_poly;
    if (witness) out["witness"] = to_json(*witness);
    return out;
}

Json polys_to_json(const Identity& id, std::size_t n, bool essential) {
    if (n == 0) throw InvalidArgument("n must be at least 1");
    Json pairs = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        const auto path = canonical_chain(i + 1);
        for (const Word& u : words_of_length(id.alphabet, i)) {
            TropPoly f = build_f_u_rho(id.left, u, path, id.alphabet);
            TropPoly g = build_f_u_rho(id.right, u, path, id.alphabet);
            const bool same = equivalent(f, g);
            if (essential) {
                f = essentialize(f);
                g = essentialize(g);
            }
            pairs.push_back(Json{{"u", u.str()},
                                 {"path", path},
                                 {"left", to_json(f)},
                                 {"right", to_json(g)},
                                 {"equivalent", same}});
        }
    }
    return Json{{"n", n}, {"mode", essential ? "essential" : "raw"}, {"pairs", std::move(pairs)}};
}

std::map<Letter, TropMatrix> matrix_assignment_from_json(const Json& j, const PosetPtr& index) {
    return read_assignment<TropMatrix>(j, [&](const Json& v) { return matrix_from_json(v, index); });
}

std::map<Letter, Bicyclic> bicyclic_assignment_from_json(const Json& j) {
    return read_assignment<Bicyclic>(j, [](const Json& v) {
        if (v.is_array()) {
            if (v.size() != 2) throw ParseError("bicyclic element must be [i, j]");
            return make_bicyclic(integer_from_json(v[0], "i"), integer_from_json(v[1], "j"));
        }
        if (!v.is_object()) throw ParseError("bicyclic element must be {\"i\", \"j\"} or [i, j]");
        return make_bicyclic(integer_from_json(field(v, "i"), "i"), integer_from_json(field(v, "j"), "j"));
    });
}

std::map<Letter, Fmim> fmim_assignment_from_json(const Json& j) {
    return read_assignment<Fmim>(j, [](const Json& v) {
        if (v.is_array()) {
            if (v.size() != 3) throw ParseError("fmim element must be [i, j, k]");
            return Fmim(int64_from_json(v[0], "i"), int64_from_json(v[1], "j"), int64_from_json(v[2], "k"));
        }
        if (!v.is_object()) throw ParseError("fmim element must be {\"i\", \"j\", \"k\"} or [i, j, k]");
        return Fmim(int64_from_json(field(v, "i"), "i"), int64_from_json(field(v, "j"), "j"),
                    int64_from_json(field(v, "k"), "k"));
    });
}

} // namespace tropid

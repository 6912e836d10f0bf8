#include "tropid.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tropid/checker.hpp"
#include "tropid/error.hpp"
#include "tropid/oracle.hpp"
#include "tropid/serialize.hpp"

struct tropid_identity {
    tropid::Identity value;
};

struct tropid_poset {
    tropid::PosetPtr value;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tropid_status fail(tropid_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
tropid_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return TROPID_OK;
    } catch (const tropid::ParseError& e) {
        return fail(TROPID_ERR_PARSE, e.what());
    } catch (const tropid::Json::exception& e) {
        return fail(TROPID_ERR_PARSE, e.what());
    } catch (const tropid::InvalidArgument& e) {
        return fail(TROPID_ERR_INVALID_ARGUMENT, e.what());
    } catch (const tropid::PreconditionError& e) {
        return fail(TROPID_ERR_PRECONDITION, e.what());
    } catch (const tropid::InternalError& e) {
        return fail(TROPID_ERR_INTERNAL, std::string("internal error: ") + e.what());
    } catch (const std::out_of_range& e) {
        return fail(TROPID_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(TROPID_ERR_INTERNAL, std::string("internal error: ") + e.what());
    } catch (...) {
        return fail(TROPID_ERR_INTERNAL, "internal error: unknown exception");
    }
}

template <class... Ptr>
bool any_null(const Ptr*... p) {
    return ((p == nullptr) || ...);
}

tropid_status null_pointer() { return fail(TROPID_ERR_NULL_POINTER, "required pointer argument is NULL"); }

std::string dump(const tropid::Json& j) { return j.dump(); }

tropid::CheckOptions check_options(const tropid_check_options* o) {
    tropid::CheckOptions out;
    if (o) out.fast_two_letter = o->fast_two_letter != 0;
    return out;
}

tropid::Witness::Model to_model(tropid_model m) {
    switch (m) {
        case TROPID_MODEL_UTN: return tropid::Witness::Model::UpperTriangular;
        case TROPID_MODEL_POSET: return tropid::Witness::Model::Poset;
        case TROPID_MODEL_BICYCLIC: return tropid::Witness::Model::Bicyclic;
        case TROPID_MODEL_FMIM: return tropid::Witness::Model::Fmim;
    }
    throw tropid::InvalidArgument("unknown model");
}

// Matrix dimension of the first assigned value, for eval without an explicit n.
std::size_t infer_dimension(const tropid::Json& doc) {
    const tropid::Json& j = doc.is_object() && doc.contains("assignment") ? doc.at("assignment") : doc;
    const tropid::Json* first = nullptr;
    if (j.is_object() && !j.empty()) first = &j.begin().value();
    if (j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("value")) first = &j[0].at("value");
    if (!first || !first->is_array() || first->empty())
        throw tropid::ParseError("cannot infer the matrix dimension from the assignment");
    return first->size();
}

} // namespace

extern "C" {

const char* tropid_version(void) { return TROPID_VERSION_STRING; }

const char* tropid_status_name(tropid_status status) {
    switch (status) {
        case TROPID_OK: return "ok";
        case TROPID_ERR_PARSE: return "parse error";
        case TROPID_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TROPID_ERR_PRECONDITION: return "precondition violated";
        case TROPID_ERR_INTERNAL: return "internal error";
        case TROPID_ERR_NULL_POINTER: return "null pointer";
    }
    return "unknown status";
}

const char* tropid_last_error(void) { return last_error.c_str(); }

void tropid_string_free(char* s) { std::free(s); }

tropid_status tropid_identity_parse(const char* text, const char* alphabet, tropid_identity** out) {
    if (any_null(text, out)) return null_pointer();
    return guarded([&] {
        std::optional<tropid::Alphabet> a;
        if (alphabet) a = tropid::Alphabet(alphabet);
        *out = new tropid_identity{tropid::parse_identity(text, a)};
    });
}

tropid_status tropid_identity_to_string(const tropid_identity* id, char** out) {
    if (any_null(id, out)) return null_pointer();
    return guarded([&] { *out = copy_string(id->value.to_string()); });
}

void tropid_identity_free(tropid_identity* id) { delete id; }

tropid_status tropid_poset_from_json(const char* json, tropid_poset** out) {
    if (any_null(json, out)) return null_pointer();
    return guarded([&] {
        tropid::Json doc;
        try {
            doc = tropid::Json::parse(json);
        } catch (const tropid::Json::parse_error& e) {
            throw tropid::ParseError(std::string("poset is not valid JSON: ") + e.what());
        }
        *out = new tropid_poset{tropid::make_poset(tropid::poset_from_json(doc))};
    });
}

tropid_status tropid_poset_chain(size_t n, tropid_poset** out) {
    if (any_null(out)) return null_pointer();
    return guarded([&] { *out = new tropid_poset{tropid::make_poset(tropid::Poset::chain(n))}; });
}

tropid_status tropid_poset_to_json(const tropid_poset* poset, char** out) {
    if (any_null(poset, out)) return null_pointer();
    return guarded([&] {
        tropid::Json j = tropid::to_json(*poset->value);
        j["max_chain_length"] = poset->value->max_chain_length();
        *out = copy_string(dump(j));
    });
}

tropid_status tropid_poset_max_chain(const tropid_poset* poset, size_t* out) {
    if (any_null(poset, out)) return null_pointer();
    return guarded([&] { *out = poset->value->max_chain_length(); });
}

void tropid_poset_free(tropid_poset* poset) { delete poset; }

tropid_status tropid_check(const tropid_identity* id, size_t n, const tropid_check_options* options, int* holds,
                           char** json) {
    if (any_null(id, holds, json)) return null_pointer();
    return guarded([&] {
        const tropid::Verdict v = tropid::check_identity(id->value, n, check_options(options));
        std::optional<tropid::Witness> w;
        if (!v.holds) {
            const auto index = v.failure->family == tropid::Failure::Family::Letter
                                   ? tropid::make_poset(tropid::Poset::chain(2))
                                   : tropid::make_poset(tropid::Poset::chain(n));
            w = tropid::witness_from_failure(id->value, *v.failure, index, tropid::Witness::Model::UpperTriangular);
            TROPID_ENSURE(tropid::verify_witness(id->value, *w), "witness for a failed check does not verify");
        }
        *json = copy_string(dump(tropid::to_json(v, w)));
        *holds = v.holds ? 1 : 0;
    });
}

tropid_status tropid_check_poset(const tropid_identity* id, const tropid_poset* poset,
                                 const tropid_check_options* options, int* holds, char** json) {
    if (any_null(id, poset, holds, json)) return null_pointer();
    return guarded([&] {
        const tropid::Verdict v = tropid::check_poset(id->value, *poset->value, check_options(options));
        std::optional<tropid::Witness> w;
        if (!v.holds) {
            const auto index = v.failure->family == tropid::Failure::Family::Letter
                                   ? tropid::make_poset(tropid::Poset::chain(2))
                                   : poset->value;
            const auto model = v.failure->family == tropid::Failure::Family::Letter
                                   ? tropid::Witness::Model::UpperTriangular
                                   : tropid::Witness::Model::Poset;
            w = tropid::witness_from_failure(id->value, *v.failure, index, model);
            TROPID_ENSURE(tropid::verify_witness(id->value, *w), "witness for a failed check does not verify");
        }
        tropid::Json j = tropid::to_json(v, w);
        j["poset"] = tropid::to_json(*poset->value);
        *json = copy_string(dump(j));
        *holds = v.holds ? 1 : 0;
    });
}

tropid_status tropid_witness_utn(const tropid_identity* id, size_t n, int* found, char** json) {
    if (any_null(id, found, json)) return null_pointer();
    return guarded([&] {
        *json = nullptr;
        *found = 0;
        if (tropid::check_identity(id->value, n).holds) return;
        const tropid::Witness w = tropid::falsifying_witness(id->value, n);
        *json = copy_string(dump(tropid::to_json(w)));
        *found = 1;
    });
}

tropid_status tropid_witness_bicyclic(const tropid_identity* id, int* found, char** json) {
    if (any_null(id, found, json)) return null_pointer();
    return guarded([&] {
        *json = nullptr;
        *found = 0;
        if (tropid::same_content(id->value.left, id->value.right) && tropid::check_ut2_letters(id->value).holds)
            return;
        const tropid::Witness w = tropid::bicyclic_witness(id->value);
        *json = copy_string(dump(tropid::to_json(w)));
        *found = 1;
    });
}

tropid_status tropid_polys(const tropid_identity* id, size_t n, tropid_polys_mode mode, char** json) {
    if (any_null(id, json)) return null_pointer();
    return guarded([&] {
        if (mode != TROPID_POLYS_RAW && mode != TROPID_POLYS_ESSENTIAL) throw tropid::InvalidArgument("unknown mode");
        *json = copy_string(dump(tropid::polys_to_json(id->value, n, mode == TROPID_POLYS_ESSENTIAL)));
    });
}

tropid_status tropid_eval(const tropid_identity* id, tropid_model model, size_t n, const tropid_poset* poset,
                          const char* assignment_json, int* equal, char** json) {
    if (any_null(id, assignment_json, equal, json)) return null_pointer();
    return guarded([&] {
        tropid::Json doc;
        try {
            doc = tropid::Json::parse(assignment_json);
        } catch (const tropid::Json::parse_error& e) {
            throw tropid::ParseError(std::string("assignment is not valid JSON: ") + e.what());
        }
        std::optional<tropid::Witness> w;
        switch (model) {
            case TROPID_MODEL_UTN: {
                const std::size_t dim = n ? n : infer_dimension(doc);
                const auto index = tropid::make_poset(tropid::Poset::chain(dim));
                w = tropid::make_matrix_witness(id->value, tropid::Witness::Model::UpperTriangular,
                                                tropid::matrix_assignment_from_json(doc, index));
                for (const auto& [letter, m] : std::get<tropid::MatrixWitness>(w->data).assignment)
                    if (!m.in_gamma())
                        throw tropid::InvalidArgument(std::string("image of '") + letter +
                                                      "' is not upper triangular");
                break;
            }
            case TROPID_MODEL_POSET: {
                if (!poset) throw tropid::InvalidArgument("poset model needs a poset");
                w = tropid::make_matrix_witness(id->value, tropid::Witness::Model::Poset,
                                                tropid::matrix_assignment_from_json(doc, poset->value));
                for (const auto& [letter, m] : std::get<tropid::MatrixWitness>(w->data).assignment)
                    if (!m.in_gamma())
                        throw tropid::InvalidArgument(std::string("image of '") + letter +
                                                      "' has a finite entry outside the order");
                break;
            }
            case TROPID_MODEL_BICYCLIC:
                w = tropid::make_bicyclic_witness(id->value, tropid::bicyclic_assignment_from_json(doc));
                break;
            case TROPID_MODEL_FMIM:
                w = tropid::make_fmim_witness(id->value, tropid::fmim_assignment_from_json(doc));
                break;
            default:
                throw tropid::InvalidArgument("unknown model");
        }
        const bool same = !w->sides_differ();
        tropid::Json j = tropid::to_json(*w);
        j["equal"] = same;
        *json = copy_string(dump(j));
        *equal = same ? 1 : 0;
    });
}

tropid_status tropid_oracle(const tropid_identity* id, const tropid_oracle_config* config, int* found,
                            char** json) {
    if (any_null(id, config, found, json)) return null_pointer();
    return guarded([&] {
        tropid::OracleConfig c;
        c.model = to_model(config->model);
        c.n = config->n;
        if (config->poset) c.poset = config->poset->value;
        c.trials = config->trials;
        c.range = config->range;
        c.bottom_probability = config->bottom_probability;
        c.seed = config->seed;
        const tropid::OracleResult r = tropid::random_falsify(id->value, c);
        tropid::Json j{{"model", tropid::model_name(c.model)},
                       {"trials_run", r.trials_run},
                       {"seed", c.seed},
                       {"found", r.witness.has_value()}};
        if (r.witness) j["witness"] = tropid::to_json(*r.witness);
        *json = copy_string(dump(j));
        *found = r.witness ? 1 : 0;
    });
}

} // extern "C"

// qgw: command-line workbench for C[SU_q(2)], finite-dimensional Hopf
// algebras, and the integer K-theory solvers. Every verb prints one JSON
// document (or a plain-text summary with --format text) and exits 0 on
// success, 1 on a user error, 2 on an internal verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>

#include "qgw/hopf_json.hpp"
#include "qgw/ktheory.hpp"
#include "qgw/podles.hpp"
#include "qgw/qaut.hpp"

using namespace qgw;
using nlohmann::json;

namespace {

// ---- configuration: flags > environment (QGW_*) > config file > defaults ----

struct Config {
    std::map<std::string, std::string> file_values;

    void load_file(const std::string& path, bool required) {
        std::ifstream in(path);
        if (!in.good()) {
            if (required) throw DomainError("cannot open config file '" + path + "'");
            return;
        }
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t");
                auto e = s.find_last_not_of(" \t");
                return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
            };
            std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            if (!key.empty()) file_values[key] = value;
        }
    }

    std::string resolve(bool flag_set, const std::string& flag_value, const std::string& key,
                        const std::string& fallback) const {
        if (flag_set) return flag_value;
        std::string env_name = "QGW_";
        for (char c : key) env_name += static_cast<char>(c == '-' ? '_' : std::toupper(c));
        if (const char* env = std::getenv(env_name.c_str())) return env;
        auto it = file_values.find(key);
        if (it != file_values.end()) return it->second;
        return fallback;
    }
};

long to_long(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw DomainError("invalid " + what + " '" + s + "'");
    }
}

HalfInt to_spin(const std::string& s) {
    auto h = HalfInt::parse(s);
    if (!h || h->twice < 0) throw DomainError("invalid spin '" + s + "'");
    return *h;
}

// ---- JSON rendering ----------------------------------------------------------

json laurent_table(const LaurentPoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.get_str();
    return out;
}

json scalar_json(const ScalarQ& s) {
    return json{{"num", laurent_table(s.num())}, {"den", laurent_table(s.den())}};
}

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json terms_json(const Alphabet& alpha, const NCPoly& p, const std::optional<Rat>& q0) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms()) {
        json word = json::array();
        for (char ch : w) word.push_back(alpha.name(static_cast<Gen>(ch)));
        json term;
        if (q0)
            term["coeff"] = qgw::to_string(c.eval(*q0));
        else
            term["coeff"] = scalar_json(c);
        term["word"] = std::move(word);
        terms.push_back(std::move(term));
    }
    return json{{"terms", std::move(terms)}};
}

json group_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion) torsion.push_back(int_json(d));
    return json{{"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

IntMatrix matrix_from_json_text(const std::string& text, const std::string& what) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError("invalid " + what + ": " + e.what());
    }
    if (!j.is_array()) throw DomainError(what + " must be a JSON array of integer rows");
    std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols)
            throw DomainError(what + " must be rectangular");
        for (std::size_t k = 0; k < cols; ++k) {
            const json& cell = j.at(i).at(k);
            if (cell.is_number_integer())
                m.at(i, k) = Int(static_cast<long>(cell.get<long long>()));
            else if (cell.is_string())
                m.at(i, k) = Int(cell.get<std::string>());
            else
                throw DomainError(what + " entries must be integers");
        }
    }
    return m;
}

// accepts inline JSON, a path to a JSON file, or a path to a whitespace grid
IntMatrix matrix_from_arg(const std::string& arg, const std::string& what) {
    std::string text = arg;
    if (std::ifstream in(arg); in.good()) {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return matrix_from_json_text(text, what);
    // whitespace grid: one row per line
    std::vector<std::vector<Int>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::vector<Int> row;
        std::string cell;
        while (cells >> cell) {
            try {
                row.emplace_back(cell);
            } catch (...) {
                throw DomainError("invalid integer '" + cell + "' in " + what);
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DomainError(what + " is empty");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw DomainError(what + " must be rectangular");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json hopf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw DomainError("cannot open FinHopf document '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid FinHopf document: ") + e.what());
    }
}

// run fn on the document with its declared scalar field
template <class Fn>
json with_hopf(const json& doc, Fn&& fn) {
    std::string kind = hopf_scalar_kind(doc);
    if (kind == "rational") return fn(hopf_from_json<Rat>(doc));
    if (kind == "scalarq") return fn(hopf_from_json<ScalarQ>(doc));
    throw DomainError("unknown scalar kind '" + kind + "'");
}

void emit(const json& out, const std::string& format, const std::string& text_summary) {
    if (format == "text")
        std::cout << text_summary << "\n";
    else
        std::cout << out.dump(2) << "\n";
}

std::string group_text(const AbelianGroup& g) { return g.to_string(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic workbench for quantum SU_q(2), Hopf algebra doubles, and K-theory"};
    app.require_subcommand(1);

    std::string config_path, format_flag = "json", q_flag, degree_flag, spin_flag, qaut_n_flag;
    app.add_option("--config", config_path, "key = value configuration file");
    auto* fmt_opt = app.add_option("--format", format_flag, "json|text")
                        ->check(CLI::IsMember({"json", "text"}));
    auto* q_opt = app.add_option("--q", q_flag, "specialize q to an exact rational, e.g. 1/2");
    auto* degree_opt = app.add_option("--degree", degree_flag, "degree bound for checks");
    auto* spin_opt = app.add_option("--spin", spin_flag, "spin label, e.g. 3/2");
    std::string spin_bound_flag;
    auto* spin_bound_opt =
        app.add_option("--spin-bound", spin_bound_flag, "largest spin the context may build");
    auto* qautn_opt = app.add_option("--qaut-n", qaut_n_flag, "largest matrix size for qaut verbs");

    std::string expr, hopf_path, boundary_text, alpha0_text, alpha1_text, matrix_text;
    std::string podles_mode, podles_arg1, podles_arg2, fuse_l1, fuse_l2, qaut_mode;
    long qaut_size = 0;
    bool suq2_suite = false;

    auto* c_norm = app.add_subcommand("normalize", "rewrite an expression to PBW normal form");
    c_norm->add_option("expr", expr, "expression, e.g. \"as a\"")->required();

    auto* c_hopf = app.add_subcommand("hopf-check", "verify Hopf axioms");
    c_hopf->add_option("--hopf", hopf_path, "FinHopf JSON document");
    c_hopf->add_flag("--suq2", suq2_suite, "run the C[SU_q(2)] axiom suite (default without --hopf)");

    auto* c_haar = app.add_subcommand("haar", "evaluate the Haar state");
    c_haar->add_option("expr", expr)->required();

    auto* c_corep = app.add_subcommand("corep", "build a spin-l corepresentation matrix");

    auto* c_fuse = app.add_subcommand("fuse", "fusion rules for two spins");
    c_fuse->add_option("l1", fuse_l1)->required();
    c_fuse->add_option("l2", fuse_l2)->required();

    auto* c_podles = app.add_subcommand("podles", "Podles sphere and line bundle checks");
    c_podles->add_option("mode", podles_mode, "project|bundle|generators|idempotent|profile")->required();
    c_podles->add_option("arg1", podles_arg1);
    c_podles->add_option("arg2", podles_arg2);

    auto* c_yd = app.add_subcommand("yd-check", "Yetter-Drinfeld compatibility on the Podles sphere");

    auto* c_double = app.add_subcommand("double", "Drinfeld codouble of a FinHopf document");
    c_double->add_option("--hopf", hopf_path, "FinHopf JSON document")->required();

    auto* c_braid = app.add_subcommand("braid", "braided square of a FinHopf document (adjoint YD structure)");
    c_braid->add_option("--hopf", hopf_path, "FinHopf JSON document")->required();

    auto* c_snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    c_snf->add_option("--matrix", matrix_text, "matrix as JSON rows")->required();

    auto* c_kth = app.add_subcommand("ktheory", "K-groups from a five-term boundary matrix");
    c_kth->add_option("--boundary", boundary_text, "boundary matrix as JSON rows")->required();

    auto* c_pv = app.add_subcommand("pv", "Pimsner-Voiculescu K-groups of a crossed product by Z");
    c_pv->add_option("--alpha0", alpha0_text, "automorphism on K0 as JSON rows")->required();
    c_pv->add_option("--alpha1", alpha1_text, "automorphism on K1 as JSON rows (may be [])");

    auto* c_qaut = app.add_subcommand("qaut", "Wang's quantum automorphism relations");
    c_qaut->add_option("mode", qaut_mode, "relations|derive|ideal-check")->required();
    c_qaut->add_option("n", qaut_size, "matrix size")->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough(); // global flags may follow the verb

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Config cfg;
        if (!config_path.empty())
            cfg.load_file(config_path, true);
        else
            cfg.load_file("qgw.conf", false);

        const std::string format = cfg.resolve(fmt_opt->count() > 0, format_flag, "format", "json");
        std::optional<Rat> q0;
        std::string q_setting = cfg.resolve(q_opt->count() > 0, q_flag, "q", "");
        if (!q_setting.empty()) {
            q0 = parse_rat(q_setting);
            if (*q0 == 0) throw DomainError("q must be nonzero");
        }
        auto degree_of = [&](long fallback) {
            return to_long(cfg.resolve(degree_opt->count() > 0, degree_flag, "degree",
                                       std::to_string(fallback)),
                           "degree");
        };
        auto spin_of = [&](const std::string& fallback) {
            return to_spin(cfg.resolve(spin_opt->count() > 0, spin_flag, "spin", fallback));
        };
        auto spin_bound_of = [&]() {
            return to_spin(cfg.resolve(spin_bound_opt->count() > 0, spin_bound_flag, "spin-bound", "3"));
        };

        if (*c_norm) {
            Suq2 ctx;
            NCPoly nf = ctx.normalize(parse_expression(expr));
            emit(terms_json(ctx.alphabet(), nf, q0), format, nf.to_string(ctx.alphabet()));
            return 0;
        }

        if (*c_hopf) {
            if (!hopf_path.empty()) {
                json rep = with_hopf(hopf_file(hopf_path), [&](const auto& h) {
                    HopfReport r = verify_hopf(h);
                    json failures = json::array();
                    for (const auto& f : r.failures) failures.push_back(f);
                    return json{{"ok", r.ok()}, {"failures", std::move(failures)}, {"dim", h.dim}};
                });
                emit(rep, format, rep["ok"].get<bool>() ? "ok" : rep.dump());
                return rep["ok"].get<bool>() ? 0 : 2;
            }
            long degree = degree_of(4);
            Suq2 ctx;
            auto words = suq2_pbw_words(degree);
            bool coassoc = true, counit_ok = true, antipode_ok = true;
            for (const auto& w : words) {
                NCPoly x = NCPoly::word(w);
                TensorPoly<2> dx = ctx.comultiply(x);
                coassoc &= ctx.comultiply_leg<2>(dx, 0) == ctx.comultiply_leg<2>(dx, 1);
                auto eps = [&](const Word& u) { return ctx.counit(NCPoly::word(u)); };
                auto S = [&](const Word& u) { return ctx.antipode(NCPoly::word(u)); };
                counit_ok &= to_poly(ctx.scalar_leg<2>(dx, 0, eps)) == x &&
                             to_poly(ctx.scalar_leg<2>(dx, 1, eps)) == x;
                NCPoly target = ctx.counit(x) * NCPoly::one();
                antipode_ok &= to_poly(ctx.merge_legs<2>(ctx.apply_leg<2>(dx, 0, S), 0)) == target &&
                               to_poly(ctx.merge_legs<2>(ctx.apply_leg<2>(dx, 1, S), 0)) == target;
            }
            const CorepMatrix& u = ctx.build_corep(HalfInt::half());
            bool unitary = true;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    NCPoly uu, su;
                    for (std::size_t k = 0; k < 2; ++k) {
                        uu += ctx.mul(u.entry[i][k], ctx.star(u.entry[j][k]));
                        su += ctx.mul(ctx.star(u.entry[k][i]), u.entry[k][j]);
                    }
                    NCPoly expect = i == j ? NCPoly::one() : NCPoly();
                    unitary &= uu == expect && su == expect;
                }
            bool ok = coassoc && counit_ok && antipode_ok && unitary;
            json rep{{"ok", ok},
                     {"degree", degree},
                     {"words", words.size()},
                     {"coassociativity", coassoc},
                     {"counit", counit_ok},
                     {"antipode", antipode_ok},
                     {"fundamental_unitary", unitary}};
            emit(rep, format, ok ? "ok" : rep.dump());
            return ok ? 0 : 2;
        }

        if (*c_haar) {
            Suq2 ctx;
            ScalarQ value = ctx.haar(parse_expression(expr));
            json out;
            std::string text;
            if (q0) {
                Rat v = value.eval(*q0);
                out = json{{"value", qgw::to_string(v)}};
                text = qgw::to_string(v);
            } else {
                out = json{{"num", value.num().to_string()}, {"den", value.den().to_string()}};
                text = value.to_string();
            }
            emit(out, format, text);
            return 0;
        }

        if (*c_corep) {
            HalfInt l = spin_of("3/2");
            Suq2 ctx(spin_bound_of());
            const CorepMatrix& c = ctx.build_corep(l);
            json entries = json::array();
            for (const auto& row : c.entry) {
                json r = json::array();
                for (const auto& e : row) r.push_back(e.to_string(ctx.alphabet()));
                entries.push_back(std::move(r));
            }
            json weights = json::array();
            for (long w : c.col_weight) weights.push_back(w);
            json out{{"spin", l.to_string()},
                     {"dim", c.dim()},
                     {"entries", std::move(entries)},
                     {"col_weights", std::move(weights)}};
            emit(out, format, "spin " + l.to_string() + ", dim " + std::to_string(c.dim()));
            return 0;
        }

        if (*c_fuse) {
            auto spins = fusion(to_spin(fuse_l1), to_spin(fuse_l2));
            json list = json::array();
            std::string text;
            for (HalfInt l : spins) {
                list.push_back(l.to_string());
                text += (text.empty() ? "" : " ") + l.to_string();
            }
            emit(json{{"spins", std::move(list)}}, format, text);
            return 0;
        }

        if (*c_podles) {
            Suq2 ctx(spin_bound_of());
            long degree = degree_of(4);
            if (podles_mode == "project") {
                if (podles_arg1.empty()) throw DomainError("podles project needs an expression");
                json comps = json::object();
                std::string text;
                for (const auto& [w, comp] : torus_project(ctx, parse_expression(podles_arg1))) {
                    comps[std::to_string(w)] = terms_json(ctx.alphabet(), comp, q0);
                    text += "weight " + std::to_string(w) + ": " + comp.to_string(ctx.alphabet()) + "\n";
                }
                emit(json{{"components", std::move(comps)}}, format, text);
                return 0;
            }
            if (podles_mode == "bundle") {
                long m = to_long(podles_arg1, "weight"), n = to_long(podles_arg2, "weight");
                bool ok = bundle_product_check(ctx, m, n, degree);
                emit(json{{"ok", ok}, {"m", m}, {"n", n}, {"degree", degree}}, format,
                     ok ? "ok" : "FAILED");
                return ok ? 0 : 2;
            }
            if (podles_mode == "generators") {
                long k = to_long(podles_arg1, "bundle label");
                bool ok = bundle_generators_check(ctx, k, degree);
                emit(json{{"ok", ok}, {"k", k}, {"degree", degree}}, format, ok ? "ok" : "FAILED");
                return ok ? 0 : 2;
            }
            if (podles_mode == "idempotent") {
                long k = to_long(podles_arg1, "bundle label");
                auto p = projective_idempotent(ctx, k);
                bool ok = true;
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) {
                        NCPoly sq;
                        for (std::size_t x = 0; x < 2; ++x) sq += ctx.mul(p[i][x], p[x][j]);
                        ok &= ctx.normalize(sq) == p[i][j] && ctx.star(p[j][i]) == p[i][j] &&
                              in_line_bundle(ctx, p[i][j], 0);
                    }
                json entries = json::array();
                for (const auto& row : p) {
                    json r = json::array();
                    for (const auto& e : row) r.push_back(e.to_string(ctx.alphabet()));
                    entries.push_back(std::move(r));
                }
                emit(json{{"k", k}, {"entries", std::move(entries)}, {"idempotent_selfadjoint_weight0", ok}},
                     format, ok ? "ok" : "FAILED");
                return ok ? 0 : 2;
            }
            if (podles_mode == "profile") {
                long k = to_long(podles_arg1, "bundle label");
                IsotypicProfile prof = isotypic_profile(ctx, k, spin_of(ctx.spin_bound().to_string()));
                json mult = json::object();
                for (const auto& [t, m] : prof.mult) mult[HalfInt::from_twice(t).to_string()] = m;
                emit(json{{"bundle", k},
                          {"multiplicities", std::move(mult)},
                          {"tail", prof.tail_description()},
                          {"matches_closed_form", prof.matches_closed_form()}},
                     format, prof.tail_description());
                return 0;
            }
            throw DomainError("unknown podles mode '" + podles_mode + "'");
        }

        if (*c_yd) {
            Suq2 ctx;
            long degree = degree_of(3);
            bool ok = yd_compatibility_check(ctx, degree);
            emit(json{{"ok", ok}, {"degree", degree}}, format, ok ? "ok" : "FAILED");
            return ok ? 0 : 2;
        }

        if (*c_double) {
            json rep = with_hopf(hopf_file(hopf_path), [&](const auto& h) {
                using F = std::decay_t<decltype(h.unit[0])>;
                HopfReport input = verify_hopf(h);
                if (!input.ok()) throw DomainError("input is not a Hopf algebra: " + input.summary());
                FinHopf<F> dd = codouble(h);
                HopfReport out = verify_hopf(dd);
                bool proj = check_hopf_hom(dd, h, codouble_pi(h)).empty() &&
                            check_hopf_hom(dd, dual_cop(h), codouble_pi_hat(h)).empty();
                return json{{"dim", dd.dim},
                            {"ok", out.ok()},
                            {"projections_ok", proj},
                            {"codouble", hopf_to_json(dd)}};
            });
            bool ok = rep["ok"].get<bool>() && rep["projections_ok"].get<bool>();
            emit(rep, format, ok ? "ok, dim " + std::to_string(rep["dim"].get<std::size_t>()) : "FAILED");
            return ok ? 0 : 2;
        }

        if (*c_braid) {
            json rep = with_hopf(hopf_file(hopf_path), [&](const auto& h) {
                using F = std::decay_t<decltype(h.unit[0])>;
                HopfReport input = verify_hopf(h);
                if (!input.ok()) throw DomainError("input is not a Hopf algebra: " + input.summary());
                DenseAlgebra<F> A = algebra_of(h);
                DenseAlgebra<F> braided = braided_product(h, A, adjoint_yd_module(h), A, h.comult);
                auto failures = check_algebra(braided);
                bool plain = braided.mult == tensor_algebra(A, A).mult;
                return json{{"dim", braided.dim},
                            {"associative", std::find(failures.begin(), failures.end(),
                                                      "associativity") == failures.end()},
                            {"unital", std::find(failures.begin(), failures.end(), "unit") ==
                                           failures.end()},
                            {"plain_tensor", plain}};
            });
            bool ok = rep["associative"].get<bool>() && rep["unital"].get<bool>();
            emit(rep, format, ok ? "ok" : "FAILED");
            return ok ? 0 : 2;
        }

        if (*c_snf) {
            IntMatrix m = matrix_from_arg(matrix_text, "matrix");
            SNFResult snf = smith_normal_form(m);
            if (!(snf.U * m * snf.V == snf.S)) throw VerificationError("SNF postcondition U M V = S failed");
            json out{{"S", matrix_json(snf.S)}, {"U", matrix_json(snf.U)}, {"V", matrix_json(snf.V)}};
            emit(out, format, out.dump());
            return 0;
        }

        if (*c_kth) {
            IntMatrix boundary = matrix_from_arg(boundary_text, "boundary matrix");
            auto [k0, k1] = resolve_five_term(boundary);
            json out{{"K0", group_json(k0)}, {"K1", group_json(k1)}};
            emit(out, format, "K0 = " + group_text(k0) + ", K1 = " + group_text(k1));
            return 0;
        }

        if (*c_pv) {
            IntMatrix a0 = matrix_from_arg(alpha0_text, "alpha0");
            IntMatrix a1 = alpha1_text.empty() ? IntMatrix(0, 0) : matrix_from_arg(alpha1_text, "alpha1");
            PVResult r = pv_solve(a0, a1);
            json out{{"K0", group_json(r.K0)}, {"K1", group_json(r.K1)}, {"note", r.note}};
            emit(out, format, "K0 = " + group_text(r.K0) + ", K1 = " + group_text(r.K1));
            return 0;
        }

        if (*c_qaut) {
            long cap = to_long(cfg.resolve(qautn_opt->count() > 0, qaut_n_flag, "qaut-n", "3"),
                               "qaut size cap");
            if (qaut_size < 1 || qaut_size > cap)
                throw DomainError("qaut size must lie in 1.." + std::to_string(cap) +
                                  " (raise with --qaut-n)");
            std::size_t n = static_cast<std::size_t>(qaut_size);
            if (qaut_mode == "relations") {
                QAutPresentation pres = wang_relations(n);
                json rels = json::array();
                for (const auto& r : pres.relations) rels.push_back(terms_json(pres.alphabet, r, {}));
                emit(json{{"n", n}, {"count", pres.relations.size()}, {"relations", std::move(rels)}},
                     format, std::to_string(pres.relations.size()) + " relations");
                return 0;
            }
            if (qaut_mode == "derive") {
                DerivedRelations der = derive_from_coaction(n);
                QAutPresentation pres = wang_relations(n);
                std::vector<NCPoly> folded_a;
                for (const auto& r : der.multiplicativity) folded_a.push_back(fold_stars(n, r));
                bool star_folds = true;
                for (const auto& r : der.star) star_folds &= fold_stars(n, r).is_zero();
                json out{{"n", n},
                         {"multiplicativity", der.multiplicativity.size()},
                         {"star", der.star.size()},
                         {"unitality", der.unitality.size()},
                         {"trace", der.trace.size()},
                         {"star_matches_pairing", star_folds}};
                emit(out, format, out.dump());
                return 0;
            }
            if (qaut_mode == "ideal-check") {
                long degree = degree_of(2);
                QAutPresentation pres = wang_relations(n);
                DerivedRelations der = derive_from_coaction(n);
                std::vector<NCPoly> members;
                for (const auto& r : der.all()) {
                    NCPoly f = fold_stars(n, r);
                    if (!f.is_zero()) members.push_back(std::move(f));
                }
                bool ok = ideal_contains(pres.alphabet, pres.relations, members, degree);
                emit(json{{"n", n}, {"degree", degree}, {"derived_in_wang_ideal", ok}}, format,
                     ok ? "ok" : "FAILED");
                return ok ? 0 : 2;
            }
            throw DomainError("unknown qaut mode '" + qaut_mode + "'");
        }
        return 1;
    } catch (const ParseError& e) {
        std::cout << json{{"error", {{"kind", "parse"}, {"message", e.what()}, {"position", e.position}}}}
                         .dump(2)
                  << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cout << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cout << json{{"error", {{"kind", "resource"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    } catch (const VerificationError& e) {
        std::cout << json{{"error", {{"kind", "verification"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 2;
    }
}

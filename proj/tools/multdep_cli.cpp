// multdep: exact multiplicative-dependence experiments on polynomial and
// rational-function values and orbits over Q and number fields.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multdep/multdep.hpp"

namespace md = multdep;
using md::json;

namespace {

struct GlobalOpts {
    std::string out;
    std::string format = "jsonl";
    std::string checkpoint;
    int workers = 1;
    long precision = 128;
    long max_candidates = -1;
    bool dry_run = false;
};

long memory_cap_from_env() {
    const char* v = std::getenv("MULTDEP_MAX_MEMORY");
    if (!v || !*v) return -1;
    try {
        return std::stol(v);
    } catch (...) {
        throw md::input_error("MULTDEP_MAX_MEMORY must be an integer byte count");
    }
}

void print_json(const json& j, const GlobalOpts& g) {
    if (g.out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream os(g.out, std::ios::trunc);
    if (!os) throw md::input_error("cannot open output file: " + g.out);
    os << j.dump(2) << "\n";
}

std::vector<md::Rational> parse_value_list(const std::string& csv) {
    std::vector<md::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(md::parse_rational(item));
    }
    if (out.empty()) throw md::input_error("empty value list");
    return out;
}

std::vector<md::QFunc> parse_function_list(const std::string& semi) {
    std::vector<md::QFunc> out;
    std::stringstream ss(semi);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        out.push_back(md::parse_rational_function(item));
    }
    if (out.empty()) throw md::input_error("empty function list");
    return out;
}

md::NumberField parse_field_spec(const std::string& spec) {
    if (spec.rfind("cyclotomic:", 0) == 0) {
        long n = std::stol(spec.substr(11));
        return md::NumberField::cyclotomic_field(n);
    }
    if (!spec.empty() && spec.front() == '{') {
        json j = json::parse(spec);
        std::vector<md::Rational> coeffs;
        for (const auto& c : j.at("modulus")) coeffs.push_back(md::parse_rational(c.get<std::string>()));
        return md::NumberField(md::QPoly(std::move(coeffs)), spec);
    }
    // bare polynomial expression
    return md::NumberField(md::parse_polynomial(spec), spec);
}

std::vector<md::FieldElement> parse_field_elements(const md::NumberField& k, const std::string& semi) {
    std::vector<md::FieldElement> out;
    std::stringstream ss(semi);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        std::vector<md::Rational> coords;
        std::stringstream cs(item);
        std::string coord;
        while (std::getline(cs, coord, ',')) coords.push_back(md::parse_rational(coord));
        out.emplace_back(k, std::move(coords));
    }
    if (out.empty()) throw md::input_error("empty element list");
    return out;
}

// hits and footer from a previous (partial) jsonl report
struct PriorReport {
    std::vector<md::Hit> hits;
    unsigned long scanned_count = 0;
    long cursor = 0;
    bool found = false;
};

PriorReport read_prior_report(const std::string& path) {
    PriorReport prior;
    std::ifstream is(path);
    if (!is) return prior;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (j.contains("type") && j["type"] == "summary") {
            prior.scanned_count = j.at("scanned_count").get<unsigned long>();
            prior.cursor = j.value("cursor", 0l);
            prior.found = true;
            continue;
        }
        md::Hit h;
        h.alpha = md::parse_rational(j.at("alpha").get<std::string>());
        h.m = j.at("m").get<long>();
        h.n = j.at("n").get<long>();
        h.relation.exponents = j.at("exponents").get<std::vector<long>>();
        h.relation.witness_order = j.at("witness_order").get<unsigned long>();
        h.relation.certified = true;
        prior.hits.push_back(std::move(h));
    }
    return prior;
}

void write_meta_sidecar(const std::string& out, double wall_seconds, int workers) {
    if (out.empty()) return;
    json meta;
    meta["wall_time_seconds"] = wall_seconds;
    meta["workers"] = workers;
    std::ofstream os(out + ".meta.json", std::ios::trunc);
    os << meta.dump(2) << "\n";
}

// Shared runner for the grid searches: checkpoint/resume, budget, merge,
// deterministic emission.  Returns the process exit code.
int run_grid_search(const GlobalOpts& g, const json& params,
                    const std::function<md::SearchReport(const md::SearchBudget&)>& run) {
    md::SearchBudget budget;
    budget.workers = g.workers;
    budget.max_candidates = g.max_candidates;
    budget.memory_soft_bytes = memory_cap_from_env();

    std::string hash = md::params_hash(params);
    PriorReport prior;
    if (!g.checkpoint.empty()) {
        if (auto cp = md::read_checkpoint(g.checkpoint)) {
            if (cp->hash != hash)
                throw md::input_error("checkpoint belongs to a different run configuration");
            budget.start_cursor = cp->grid_cursor;
            if (!g.out.empty()) prior = read_prior_report(g.out);
        }
        budget.on_checkpoint = [&](long cursor) {
            md::write_checkpoint(g.checkpoint, md::Checkpoint{cursor, hash});
        };
    }

    auto t0 = std::chrono::steady_clock::now();
    md::SearchReport report = run(budget);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    report.hits.insert(report.hits.end(), prior.hits.begin(), prior.hits.end());
    md::sort_hits(report.hits);
    report.scanned_count += prior.scanned_count;
    report.parameters = params;

    if (g.out.empty()) {
        md::emit_jsonl(report, std::cout);
    } else {
        std::ofstream os(g.out, std::ios::binary | std::ios::trunc);
        if (!os) throw md::input_error("cannot open output file: " + g.out);
        if (g.format == "jsonl")
            md::emit_jsonl(report, os);
        else
            md::emit_csv(report, os);
    }
    write_meta_sidecar(g.out, wall, g.workers);
    if (report.partial) {
        std::cerr << "budget exhausted: partial coverage up to grid cursor " << report.cursor << "\n";
        return 2;
    }
    return 0;
}

int cmd_verify_paper_examples() {
    bool ok = true;
    // multiplicative relation on (alpha+1, alpha-1, 2(alpha^2-1)) at
    // alpha = 2^m - 1: exponents proportional to (-(m+1), -m, m)
    {
        md::NumberField q(md::QPoly::monomial(md::Rational(1), 1), "Q");
        bool all = true;
        for (long m = 2; m <= 20; ++m) {
            md::Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(m));
            md::Rational alpha(pw - 1);
            std::vector<md::FieldElement> values{
                md::FieldElement::constant(q, alpha + 1),
                md::FieldElement::constant(q, alpha - 1),
                md::FieldElement::constant(q, 2 * (alpha * alpha - 1))};
            md::IndependenceVerdict v = md::bounded_field_dependence(values, m + 1);
            bool good = v.dependent && v.relation->witness_order == 1;
            // the family relation certifies exactly at every m; the search
            // returns that lattice line for m >= 3 (m = 2 is the degenerate
            // rank-2 power-of-2 instance with a shorter witness)
            good = good && md::pow_rational(alpha + 1, -(m + 1)) * md::pow_rational(alpha - 1, -m) *
                                   md::pow_rational(2 * (alpha * alpha - 1), m) ==
                               1;
            if (good && m >= 3) {
                const auto& k = v.relation->exponents;
                long a = -(m + 1), b = -m, c = m;
                good = (k[0] == a && k[1] == b && k[2] == c) || (k[0] == -a && k[1] == -b && k[2] == -c);
            }
            all = all && good;
        }
        std::cout << (all ? "PASS" : "FAIL") << " alpha_m = 2^m - 1 relation family (m = 2..20)\n";
        ok = ok && all;
    }
    // compositional square root of T_4
    {
        md::SqrtT4Result r = md::compositional_sqrt_T4();
        bool good = md::poly_to_string(r.f) == "X^2 - 2" &&
                    r.f.compose_poly(r.f) == md::chebyshev(4);
        std::cout << (good ? "PASS" : "FAIL") << " compositional square root of T_4\n";
        ok = ok && good;
    }
    // 1/(zeta_n - 1) integrality vs the Phi_n(1) dichotomy
    {
        bool all = true;
        for (long n = 2; n <= 300; ++n) {
            md::NumberField k = md::NumberField::cyclotomic_field(n);
            md::FieldElement z = md::FieldElement::generator(k);
            md::FieldElement a =
                md::FieldElement::constant(k, md::Rational(1)) / (z - md::FieldElement::constant(k, md::Rational(1)));
            bool integral = md::is_algebraic_integer(a);
            bool prime_power = md::cyclotomic(n).eval(md::Rational(1)) != 1;
            all = all && (integral == !prime_power);
        }
        std::cout << (all ? "PASS" : "FAIL") << " 1/(zeta_n - 1) unit law (n = 2..300)\n";
        ok = ok && all;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicative dependence of polynomial and rational-function values and orbits"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--format", g.format, "report format: jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_option("--workers", g.workers, "worker threads for grid searches")->check(CLI::PositiveNumber);
    app.add_option("--checkpoint", g.checkpoint, "checkpoint file for resumable searches");
    app.add_option("--precision", g.precision, "binary digits for certified embeddings");
    app.add_option("--max-candidates", g.max_candidates, "per-run candidate budget (-1 = unlimited)");
    app.add_flag("--dry-run", g.dry_run, "validate inputs and print the hypothesis report only");

    // ----- rel
    auto* rel = app.add_subcommand("rel", "multiplicative dependence of nonzero rationals (complete)");
    std::string rel_values;
    rel->add_option("--values", rel_values, "comma-separated rationals")->required();

    // ----- rel-field
    auto* relf = app.add_subcommand("rel-field", "bounded-exponent dependence in a number field");
    std::string relf_field, relf_values;
    long relf_bound = 10;
    relf->add_option("--field", relf_field, "field spec: cyclotomic:n, {\"modulus\": [...]}, or a monic polynomial")->required();
    relf->add_option("--values", relf_values, "semicolon-separated elements, coordinates comma-separated")->required();
    relf->add_option("--bound", relf_bound, "exponent bound B");

    // ----- indep-mod-const
    auto* imc = app.add_subcommand("indep-mod-const", "multiplicative independence modulo constants (complete)");
    std::string imc_funcs;
    imc->add_option("--funcs", imc_funcs, "semicolon-separated rational functions")->required();

    // ----- gen-linfrac
    auto* gen = app.add_subcommand("gen-linfrac", "can the family multiplicatively generate a power of a linear fractional function?");
    std::string gen_funcs;
    gen->add_option("--funcs", gen_funcs, "semicolon-separated rational functions")->required();

    // ----- special
    auto* special = app.add_subcommand("special", "affine conjugacy to +-X^d or +-T_d");
    std::string special_f;
    special->add_option("--f", special_f, "polynomial")->required();

    // ----- preperiodic
    auto* prep = app.add_subcommand("preperiodic", "exact preperiodic points over Q");
    std::string prep_f, prep_alpha;
    prep->add_option("--f", prep_f, "polynomial of degree >= 2")->required();
    prep->add_option("--alpha", prep_alpha, "test a single starting point instead of enumerating");

    // ----- orbit
    auto* orb = app.add_subcommand("orbit", "exact orbit of a rational function");
    std::string orb_phi, orb_alpha;
    long orb_depth = 10;
    orb->add_option("--phi", orb_phi, "rational function")->required();
    orb->add_option("--alpha", orb_alpha, "starting point")->required();
    orb->add_option("--depth", orb_depth, "number of iterations");

    // ----- search-pairs
    auto* sp = app.add_subcommand("search-pairs", "dependent pairs f^{(m)}(alpha), f^{(n)}(alpha) over a height grid");
    std::string sp_f;
    long sp_grid = 20, sp_depth = 6, sp_bound = 20;
    sp->add_option("--f", sp_f, "polynomial of degree >= 2")->required();
    sp->add_option("--height-num", sp_grid, "grid bound on max(|num|, den)");
    sp->add_option("--depth", sp_depth, "max iterate N");
    sp->add_option("--bound", sp_bound, "exponent bound (reserved for field variants)");

    // ----- consecutive
    auto* cons = app.add_subcommand("consecutive", "dependence of s consecutive iterates over a height grid");
    std::string cons_f;
    long cons_s = 2, cons_grid = 20, cons_depth = 6, cons_bound = 20;
    cons->add_option("--f", cons_f, "polynomial of degree >= 2")->required();
    cons->add_option("--s", cons_s, "window length");
    cons->add_option("--height-num", cons_grid, "grid bound on max(|num|, den)");
    cons->add_option("--depth", cons_depth, "max window offset N");
    cons->add_option("--bound", cons_bound, "exponent bound (reserved)");

    // ----- scan
    auto* scan = app.add_subcommand("scan", "dependence of alpha with phi^{(n)}(alpha)");
    std::string scan_phi, scan_alpha;
    long scan_depth = 10, scan_bound = 20;
    scan->add_option("--phi", scan_phi, "rational function")->required();
    scan->add_option("--alpha", scan_alpha, "starting point")->required();
    scan->add_option("--depth", scan_depth, "max iterate");
    scan->add_option("--bound", scan_bound, "exponent bound (reserved)");

    // ----- valuation-check
    auto* val = app.add_subcommand("valuation-check", "verify v_p(f^{(m)}(alpha)) = d^m v_p(alpha)");
    std::string val_f, val_alpha, val_p;
    long val_depth = 4;
    val->add_option("--f", val_f, "polynomial of degree >= 2")->required();
    val->add_option("--alpha", val_alpha, "starting point with v_p(alpha) < 0")->required();
    val->add_option("--p", val_p, "prime outside S_f")->required();
    val->add_option("--depth", val_depth, "max iterate M");

    // ----- growth-check
    auto* growth = app.add_subcommand("growth-check", "strict Archimedean growth along an orbit");
    std::string growth_f, growth_alpha;
    long growth_depth = 8;
    growth->add_option("--f", growth_f, "polynomial of degree >= 2")->required();
    growth->add_option("--alpha", growth_alpha, "starting point with |alpha| > L")->required();
    growth->add_option("--depth", growth_depth, "iterations to check");

    auto* verify = app.add_subcommand("verify-paper-examples", "run the worked-example regression suite");

    // global flags remain valid after the subcommand name
    for (CLI::App* sub : {rel, relf, imc, gen, special, prep, orb, sp, cons, scan, val, growth, verify})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rel->parsed()) {
            auto values = parse_value_list(rel_values);
            if (g.dry_run) {
                json j{{"command", "rel"}, {"values", rel_values}, {"valid", true}};
                print_json(j, g);
                return 0;
            }
            print_json(md::verdict_to_json(md::rational_dependence(values)), g);
            return 0;
        }
        if (relf->parsed()) {
            md::NumberField k = parse_field_spec(relf_field);
            auto values = parse_field_elements(k, relf_values);
            json flags{{"field", k.label()},
                       {"degree", k.degree()},
                       {"irreducibility",
                        k.irreducibility() == md::NumberField::Irreducibility::proven ? "proven" : "asserted"}};
            if (g.dry_run) {
                flags["command"] = "rel-field";
                flags["valid"] = true;
                print_json(flags, g);
                return 0;
            }
            json j = md::verdict_to_json(md::bounded_field_dependence(values, relf_bound));
            j["field"] = flags;
            print_json(j, g);
            return 0;
        }
        if (imc->parsed()) {
            auto funcs = parse_function_list(imc_funcs);
            if (g.dry_run) {
                print_json(json{{"command", "indep-mod-const"}, {"count", funcs.size()}, {"valid", true}}, g);
                return 0;
            }
            print_json(md::verdict_to_json(md::mult_indep_mod_constants(funcs)), g);
            return 0;
        }
        if (gen->parsed()) {
            auto funcs = parse_function_list(gen_funcs);
            if (g.dry_run) {
                print_json(json{{"command", "gen-linfrac"}, {"count", funcs.size()}, {"valid", true}}, g);
                return 0;
            }
            md::GeneratesWitness w = md::generates_power_linear_fractional(funcs);
            json j;
            j["generates"] = w.generates;
            if (w.generates) {
                j["exponents"] = w.exponents;
                j["product"] = w.product.describe();
                j["power"] = w.product.power;
            }
            print_json(j, g);
            return 0;
        }
        if (special->parsed()) {
            md::QPoly f = md::parse_polynomial(special_f);
            if (g.dry_run) {
                print_json(json{{"command", "special"}, {"degree", f.degree()}, {"valid", true}}, g);
                return 0;
            }
            auto w = md::is_special(f);
            json j;
            j["special"] = w.has_value();
            if (w) {
                j["target"] = md::target_name(w->target, w->degree);
                j["a"] = md::to_string(w->a);
                j["b"] = md::to_string(w->b);
            }
            print_json(j, g);
            return 0;
        }
        if (prep->parsed()) {
            md::QPoly f = md::parse_polynomial(prep_f);
            if (g.dry_run) {
                json j{{"command", "preperiodic"},
                       {"L", md::growth_constant_L(f).get_d()},
                       {"multiple_roots", md::has_multiple_roots(f)},
                       {"valid", true}};
                print_json(j, g);
                return 0;
            }
            json j;
            if (!prep_alpha.empty()) {
                auto r = md::is_preperiodic(f, md::parse_rational(prep_alpha));
                j["preperiodic"] = r.preperiodic;
                j["certificate"] = r.certificate;
                json trace = json::array();
                for (const auto& v : r.trace) trace.push_back(md::to_string(v));
                j["trace"] = trace;
            } else {
                json pts = json::array();
                for (const auto& v : md::preperiodic_points(f)) pts.push_back(md::to_string(v));
                j["preperiodic_points"] = pts;
            }
            print_json(j, g);
            return 0;
        }
        if (orb->parsed()) {
            md::QFunc phi = md::parse_rational_function(orb_phi);
            if (g.dry_run) {
                print_json(json{{"command", "orbit"},
                                {"phi", md::func_to_string(phi)},
                                {"alpha", md::to_string(md::parse_rational(orb_alpha))},
                                {"valid", true}},
                           g);
                return 0;
            }
            md::Orbit o = md::orbit(phi, md::parse_rational(orb_alpha), orb_depth);
            json j;
            json pts = json::array();
            for (const auto& v : o.points) pts.push_back(md::to_string(v));
            j["points"] = pts;
            switch (o.termination) {
                case md::OrbitTermination::cap: j["terminated_by"] = "cap"; break;
                case md::OrbitTermination::pole:
                    j["terminated_by"] = "pole";
                    j["pole_index"] = o.pole_index;
                    break;
                case md::OrbitTermination::cycle:
                    j["terminated_by"] = "cycle";
                    j["cycle_entry"] = o.cycle_entry;
                    j["cycle_period"] = o.cycle_period;
                    break;
            }
            print_json(j, g);
            return 0;
        }
        if (sp->parsed()) {
            md::QPoly f = md::parse_polynomial(sp_f);
            md::PairSearchHypotheses h = md::pair_search_hypotheses(f);
            json params{{"command", "search-pairs"},
                        {"f", md::poly_to_string(f)},
                        {"grid", sp_grid},
                        {"depth", sp_depth},
                        {"bound", sp_bound}};
            json hyp{{"f_has_multiple_roots", h.f_has_multiple_roots}};
            if (h.f2_checked) hyp["f2_has_multiple_roots"] = h.f2_has_multiple_roots;
            if (g.dry_run) {
                json j = params;
                j["hypotheses"] = hyp;
                j["valid"] = true;
                print_json(j, g);
                return 0;
            }
            if (h.f_has_multiple_roots || (h.f2_checked && h.f2_has_multiple_roots))
                std::cerr << "warning: theorem hypothesis violated (multiple roots); searching anyway\n";
            return run_grid_search(g, params, [&](const md::SearchBudget& b) {
                return md::search_dependent_pairs(f, sp_grid, sp_depth, sp_bound, b);
            });
        }
        if (cons->parsed()) {
            md::QPoly f = md::parse_polynomial(cons_f);
            bool monomial = f.term_count() == 1;
            auto special_w = f.degree() >= 2 ? md::is_special(f) : std::nullopt;
            json params{{"command", "consecutive"},
                        {"f", md::poly_to_string(f)},
                        {"s", cons_s},
                        {"grid", cons_grid},
                        {"depth", cons_depth},
                        {"bound", cons_bound}};
            json hyp{{"monomial", monomial}, {"special", special_w.has_value()}};
            if (g.dry_run) {
                json j = params;
                j["hypotheses"] = hyp;
                j["valid"] = true;
                print_json(j, g);
                return 0;
            }
            if (monomial || special_w)
                std::cerr << "warning: corollary hypothesis violated (monomial or special f); searching anyway\n";
            return run_grid_search(g, params, [&](const md::SearchBudget& b) {
                return md::consecutive_dependence_search(f, cons_s, cons_grid, cons_depth, cons_bound, b);
            });
        }
        if (scan->parsed()) {
            md::QFunc phi = md::parse_rational_function(scan_phi);
            md::Rational alpha = md::parse_rational(scan_alpha);
            md::ScanFlags flags;
            flags.alpha_torsion = alpha == 1 || alpha == -1;
            flags.excluded_form = md::excluded_power_form(phi);
            if (g.dry_run) {
                json j{{"command", "scan"},
                       {"phi", md::func_to_string(phi)},
                       {"alpha", md::to_string(alpha)},
                       {"alpha_torsion_flag", flags.alpha_torsion},
                       {"excluded_form_flag", flags.excluded_form.has_value()},
                       {"valid", true}};
                print_json(j, g);
                return 0;
            }
            if (flags.alpha_torsion)
                std::cerr << "warning: alpha is a root of unity; theorem requires alpha outside U\n";
            if (flags.excluded_form)
                std::cerr << "warning: phi = beta*X^{+-d} is the excluded form; scanning anyway\n";
            md::SearchReport r = md::scan_fixed_alpha(phi, alpha, scan_depth, scan_bound);
            if (g.out.empty()) {
                md::emit_jsonl(r, std::cout);
            } else {
                md::emit_report(r, g.out, g.format);
            }
            return 0;
        }
        if (val->parsed()) {
            md::QPoly f = md::parse_polynomial(val_f);
            md::Rational alpha = md::parse_rational(val_alpha);
            md::Integer p(val_p);
            if (g.dry_run) {
                json sv = json::array();
                for (const auto& q : md::places_S_f(f).primes) sv.push_back(md::to_string(q));
                print_json(json{{"command", "valuation-check"}, {"S_f_finite", sv}, {"valid", true}}, g);
                return 0;
            }
            md::ValuationTrace t = md::valuation_escape_check(f, alpha, p, val_depth);
            json j;
            j["identity_holds"] = t.identity_holds;
            j["valuations"] = t.valuations;
            print_json(j, g);
            return 0;
        }
        if (growth->parsed()) {
            md::QPoly f = md::parse_polynomial(growth_f);
            md::Rational alpha = md::parse_rational(growth_alpha);
            if (g.dry_run) {
                print_json(json{{"command", "growth-check"},
                                {"L", md::growth_constant_L(f).get_d()},
                                {"valid", true}},
                           g);
                return 0;
            }
            md::GrowthCheck c = md::check_archimedean_growth(f, alpha, growth_depth);
            json j;
            j["strictly_increasing"] = c.increasing;
            j["per_embedding"] = c.per_embedding;
            json mags = json::array();
            for (const auto& v : c.orbit_abs) mags.push_back(md::to_string(v));
            j["orbit_abs"] = mags;
            print_json(j, g);
            return 0;
        }
        if (verify->parsed()) return cmd_verify_paper_examples();
    } catch (const md::budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const md::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

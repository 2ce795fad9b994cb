#include "susp/cli.hpp"

#include "susp/classgroup.hpp"
#include "susp/error.hpp"
#include "susp/geometry.hpp"
#include "susp/modulecheck.hpp"
#include "susp/parse.hpp"
#include "susp/tower.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace susp {

namespace {

using nlohmann::json;

struct Command {
    std::string verb;
    std::string ring;
    std::vector<std::string> fs;
    std::vector<std::string> operands;
    bool json = false;
    bool gm_example = false;
    std::optional<std::size_t> cols;
};

struct Context {
    Command cmd;
    GroebnerOptions gopts;
    FactorOptions fopts;
    RingPtr base;
    TowerPtr tower;  // null without --f
};

struct Answer {
    int exit_code = 0;
    std::string text;
    json data;
};

const std::vector<std::string> kVerbs{"nf",     "mul",    "factor", "is-prime", "is-unit",     "class-group",
                                      "smooth", "report", "snf",    "fitting",  "verify-paper"};

void arity(const Command& c, std::size_t lo, std::size_t hi) {
    if (c.operands.size() < lo || c.operands.size() > hi) {
        std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
        throw Error(ErrorCode::InvalidArgument,
                    c.verb + " takes " + want + " operand(s), got " + std::to_string(c.operands.size()));
    }
}

const RingPtr& need_base(const Context& ctx) {
    if (!ctx.base) throw Error(ErrorCode::InvalidArgument, ctx.cmd.verb + " needs --ring");
    return ctx.base;
}

const TowerPtr& need_tower(const Context& ctx) {
    need_base(ctx);
    if (!ctx.tower) throw Error(ErrorCode::InvalidArgument, ctx.cmd.verb + " needs at least one --f");
    return ctx.tower;
}

json point_json(const std::map<std::string, Rational>& p) {
    json j = json::object();
    for (const auto& [name, value] : p) j[name] = value.get_str();
    return j;
}

std::string point_text(const std::map<std::string, Rational>& p) {
    std::string out = "(";
    bool first = true;
    for (const auto& [name, value] : p) {
        out += (first ? "" : ", ") + name + "=" + value.get_str();
        first = false;
    }
    return out + ")";
}

json factorization_json(const Factorization& f) {
    json j;
    j["unit"] = f.unit.get_str();
    j["factors"] = json::array();
    for (const auto& [p, m] : f.factors) j["factors"].push_back({{"factor", p.to_string()}, {"multiplicity", m}});
    return j;
}

// Element of the top level of the tower, or of the base ring without one.
struct Value {
    std::optional<SuspElem> elem;
    std::optional<MultiPoly> poly;

    std::string to_string() const { return elem ? elem->to_string() : poly->to_string(); }
};

Value parse_value(const Context& ctx, const std::string& src) {
    if (ctx.tower) return Value{SuspElem::parse(ctx.tower, ctx.tower->height(), src), std::nullopt};
    return Value{std::nullopt, parse_polynomial(src, need_base(ctx))};
}

json value_json(const Value& v) {
    json j;
    j["result"] = v.to_string();
    if (v.elem) {
        j["level"] = v.elem->level();
        json comps = json::object();
        if (!v.elem->is_zero()) {
            for (const auto& [deg, c] : v.elem->components()) comps[std::to_string(deg)] = c.to_string();
        }
        j["components"] = comps;
    } else {
        j["level"] = 0;
    }
    return j;
}

Answer do_nf(const Context& ctx) {
    arity(ctx.cmd, 1, 1);
    Value v = parse_value(ctx, ctx.cmd.operands[0]);
    return {0, v.to_string(), value_json(v)};
}

Answer do_mul(const Context& ctx) {
    arity(ctx.cmd, 2, 2);
    Value a = parse_value(ctx, ctx.cmd.operands[0]);
    Value b = parse_value(ctx, ctx.cmd.operands[1]);
    Value r = a.elem ? Value{susp_mul(*a.elem, *b.elem), std::nullopt} : Value{std::nullopt, *a.poly * *b.poly};
    return {0, r.to_string(), value_json(r)};
}

Answer do_factor(const Context& ctx) {
    arity(ctx.cmd, 1, 1);
    Value v = parse_value(ctx, ctx.cmd.operands[0]);
    json j;
    j["input"] = v.to_string();
    if (!v.elem) {
        Factorization f = factor_multivariate(*v.poly, ctx.fopts);
        j["ufd"] = true;
        j.update(factorization_json(f));
        return {0, f.to_string(), j};
    }
    SuspFactorResult r = factor_susp(*v.elem, ctx.fopts);
    if (auto* nu = std::get_if<NotUfd>(&r)) {
        j["ufd"] = false;
        j["witness"] = factorization_json(nu->witness);
        j["witness"]["text"] = nu->witness.to_string();
        return {0, "not a UFD: f = " + nu->witness.to_string(), j};
    }
    const auto& sf = std::get<SuspFactorization>(r);
    j["ufd"] = true;
    j["unit"] = sf.unit.to_string();
    j["factors"] = json::array();
    for (const auto& [p, m] : sf.factors) j["factors"].push_back({{"factor", p.to_string()}, {"multiplicity", m}});
    return {0, sf.to_string(), j};
}

Answer do_is_prime(const Context& ctx) {
    arity(ctx.cmd, 0, 1);
    json j;
    if (ctx.cmd.operands.empty()) {
        const TowerPtr& t = need_tower(ctx);
        PrimeReport r = is_prime_uvf(t, t->height(), ctx.fopts);
        const auto& lv = t->level(t->height());
        j["subject"] = "u, v, f";
        j["prime"] = r.f_prime;
        j["u_prime"] = r.u_prime;
        j["v_prime"] = r.v_prime;
        j["f_prime"] = r.f_prime;
        j["witness"] = r.f_prime ? json(nullptr) : json(r.witness_string());
        std::ostringstream out;
        out << lv.u_name << " prime: " << (r.u_prime ? "true" : "false") << "\n";
        out << lv.v_name << " prime: " << (r.v_prime ? "true" : "false") << "\n";
        out << "f prime:  " << (r.f_prime ? "true" : "false");
        if (!r.f_prime) out << "\nwitness:  " << r.witness_string();
        return {r.f_prime ? 0 : 1, out.str(), j};
    }
    Value v = parse_value(ctx, ctx.cmd.operands[0]);
    bool prime = v.elem ? certify_prime(*v.elem, ctx.fopts) : is_irreducible(*v.poly, ctx.fopts);
    j["subject"] = v.to_string();
    j["prime"] = prime;
    return {prime ? 0 : 1, prime ? "true" : "false", j};
}

Answer do_is_unit(const Context& ctx) {
    arity(ctx.cmd, 1, 1);
    Value v = parse_value(ctx, ctx.cmd.operands[0]);
    bool unit = v.elem ? is_unit(*v.elem) : (v.poly->is_constant() && !v.poly->is_zero());
    json j{{"subject", v.to_string()}, {"unit", unit}};
    return {unit ? 0 : 1, unit ? "true" : "false", j};
}

Answer do_class_group(const Context& ctx) {
    arity(ctx.cmd, 0, 0);
    ExactSequenceReport r = exact_sequence_report(*need_tower(ctx), ctx.fopts);
    std::string text = r.text;
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return {0, "Cl(X) = " + r.data["group"].get<std::string>() + "\n" + text, r.data};
}

Answer do_smooth(const Context& ctx) {
    arity(ctx.cmd, 0, 1);
    MultiPoly f = ctx.cmd.operands.empty() ? need_tower(ctx)->level(1).f.embed(need_base(ctx))
                                           : parse_polynomial(ctx.cmd.operands[0], need_base(ctx));
    SmoothnessResult r = hypersurface_smooth(f, ctx.gopts);
    json j{{"f", f.to_string()}, {"smooth", r.smooth}, {"witness", r.witness.to_strings()}};
    j["singular_point"] = r.singular_point ? point_json(*r.singular_point) : json(nullptr);
    std::string text = r.smooth ? "smooth" : "singular";
    if (r.singular_point) text += " at " + point_text(*r.singular_point);
    return {r.smooth ? 0 : 1, text, j};
}

Answer do_report(const Context& ctx) {
    arity(ctx.cmd, 0, 0);
    SuspensionReport r = suspension_report(*need_tower(ctx), ctx.gopts, ctx.fopts);
    std::string text = r.to_text();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return {0, text, r.to_json()};
}

IntMatrix parse_int_matrix(const std::string& src) {
    json m;
    try {
        m = json::parse(src);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("matrix is not valid JSON: ") + e.what());
    }
    if (!m.is_array()) throw Error(ErrorCode::InvalidArgument, "matrix must be a JSON array of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : m) {
        if (!r.is_array()) throw Error(ErrorCode::InvalidArgument, "matrix row must be a JSON array");
        std::vector<Integer> row;
        for (const auto& e : r) {
            if (e.is_number_integer()) row.emplace_back(e.get<long>());
            else if (e.is_string()) row.emplace_back(Integer(e.get<std::string>()));
            else throw Error(ErrorCode::InvalidArgument, "matrix entries must be integers");
        }
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows);
}

Answer do_snf(const Context& ctx) {
    arity(ctx.cmd, 1, 1);
    IntMatrix m = parse_int_matrix(ctx.cmd.operands[0]);
    SmithForm s = smith_normal_form(m);
    AbelianGroupPresentation g = cokernel(m);
    json j{{"U", s.U.to_json()}, {"D", s.D.to_json()}, {"V", s.V.to_json()}};
    j["free_rank"] = g.free_rank;
    j["invariant_factors"] = json::array();
    for (const auto& d : g.invariant_factors) j["invariant_factors"].push_back(integer_to_json(d));
    j["cokernel"] = g.to_string();
    std::ostringstream out;
    out << "D = " << s.D.to_string() << "\nU = " << s.U.to_string() << "\nV = " << s.V.to_string()
        << "\ncokernel = " << g.to_string();
    return {0, out.str(), j};
}

Answer do_fitting(const Context& ctx) {
    const Command& c = ctx.cmd;
    if (c.gm_example) {
        arity(c, 0, 1);
        std::optional<PresentationMatrix> p;
        if (!c.operands.empty()) {
            p = PresentationMatrix::from_json(make_ring({"y1", "y2"}), 2, json::parse(c.operands[0]));
        }
        Section5Report r = section5_report(p, ctx.gopts);
        std::string text = r.to_text();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        return {r.cyclic == false ? 1 : 0, text, r.to_json()};
    }
    arity(c, 2, 2);
    json rows;
    try {
        rows = json::parse(c.operands[0]);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("presentation is not valid JSON: ") + e.what());
    }
    std::size_t cols = 0;
    if (c.cols) cols = *c.cols;
    else if (rows.is_array() && !rows.empty() && rows[0].is_array()) cols = rows[0].size();
    else throw Error(ErrorCode::InvalidArgument, "an empty presentation needs --cols");
    std::size_t k = 0;
    try {
        long kk = std::stol(c.operands[1]);
        if (kk < 0) throw std::invalid_argument("negative");
        k = static_cast<std::size_t>(kk);
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "k must be a non-negative integer");
    }
    PresentationMatrix p = PresentationMatrix::from_json(need_base(ctx), cols, rows);
    std::vector<MultiPoly> fit = fitting_ideal(p, k);
    bool gen = ideal_contains_one(fit, ctx.gopts);
    json j{{"k", k}, {"rows", p.rows()}, {"cols", p.cols()}, {"generated_by_k", gen}};
    j["fitting_ideal"] = json::array();
    for (const auto& g : fit) j["fitting_ideal"].push_back(g.to_string());
    std::ostringstream out;
    out << "Fitt_" << k << " = (";
    for (std::size_t i = 0; i < fit.size(); ++i) out << (i ? ", " : "") << fit[i].to_string();
    out << ")" << (fit.empty() ? " = 0" : "") << "\ngenerated by " << k << " element(s): " << (gen ? "true" : "false");
    return {gen ? 0 : 1, out.str(), j};
}

Answer do_verify_paper(const Context& ctx) {
    arity(ctx.cmd, 0, 0);
    CliResult r = verify_paper();
    json j{{"passed", r.exit_code == 0}, {"checks", json::array()}};
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(": ");
        auto space = line.find(' ');
        j["checks"].push_back({{"status", line.substr(0, space)},
                               {"name", line.substr(space + 1, colon - space - 1)},
                               {"detail", colon == std::string::npos ? "" : line.substr(colon + 2)}});
    }
    std::string text = r.out;
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return {r.exit_code, text, j};
}

Answer dispatch(const Context& ctx) {
    static const std::map<std::string, std::function<Answer(const Context&)>> table{
        {"nf", do_nf},         {"mul", do_mul},       {"factor", do_factor}, {"is-prime", do_is_prime},
        {"is-unit", do_is_unit}, {"class-group", do_class_group}, {"smooth", do_smooth}, {"report", do_report},
        {"snf", do_snf},       {"fitting", do_fitting}, {"verify-paper", do_verify_paper}};
    return table.at(ctx.cmd.verb)(ctx);
}

std::uint64_t pair_budget_from_env(std::uint64_t fallback) {
    const char* s = std::getenv("SUSP_PAIR_BUDGET");
    if (!s || !*s) return fallback;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != std::string(s).size() || v == 0) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, std::string("SUSP_PAIR_BUDGET must be a positive integer, got ") + s);
    }
}

CliResult render_error(bool as_json, const std::string& code, const std::string& message) {
    CliResult r;
    r.exit_code = 2;
    if (as_json) r.out = json{{"error", {{"code", code}, {"message", message}}}}.dump(2) + "\n";
    else r.err = "error[" + code + "]: " + message + "\n";
    return r;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    Command cmd;
    CLI::App app{"Suspension toolkit: uv = f(x) over Q[x_1..x_n]", "susp"};
    app.add_option("--ring", cmd.ring, "base ring, e.g. QQ[x,y]");
    app.add_option("--f", cmd.fs, "suspension function, repeat to build a tower")->allow_extra_args(false);
    app.add_flag("--json", cmd.json, "emit JSON");
    app.add_flag("--gm-example", cmd.gm_example, "fitting: the non-suspension example report");
    app.add_option("--cols", cmd.cols, "fitting: number of generators for an empty presentation");
    app.add_option("verb", cmd.verb, "one of: nf mul factor is-prime is-unit class-group smooth report snf fitting "
                                     "verify-paper")
        ->required();
    // Operands are collected as extras: a CLI11 vector positional would split
    // JSON operands such as "[[2,4]]" at commas.
    app.allow_extras();
    app.footer("Operands follow the verb; a leading '-' is fine, e.g. `susp --ring QQ[x] nf -x`.");

    bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        for (auto& extra : app.remaining()) {
            if (extra != "--") cmd.operands.push_back(extra);
        }
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        return render_error(wants_json, "usage", e.what());
    }
    if (std::find(kVerbs.begin(), kVerbs.end(), cmd.verb) == kVerbs.end()) {
        return render_error(cmd.json, "usage", "unknown verb '" + cmd.verb + "'");
    }

    try {
        Context ctx{cmd, {}, {}, nullptr, nullptr};
        ctx.gopts.pair_budget = pair_budget_from_env(ctx.gopts.pair_budget);
        if (!cmd.ring.empty()) ctx.base = parse_ring_spec(cmd.ring);
        if (!cmd.fs.empty()) ctx.tower = tower_new(need_base(ctx), cmd.fs);
        Answer a = dispatch(ctx);
        CliResult r;
        r.exit_code = a.exit_code;
        if (cmd.json) {
            json j = a.data;
            j["verb"] = cmd.verb;
            r.out = j.dump(2) + "\n";
        } else {
            r.out = a.text + "\n";
        }
        return r;
    } catch (const Error& e) {
        return render_error(cmd.json, std::string(error_code_name(e.code())), e.what());
    } catch (const json::exception& e) {
        return render_error(cmd.json, "invalid_argument", e.what());
    }
}

}  // namespace susp

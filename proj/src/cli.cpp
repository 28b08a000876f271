#include "freecalc/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "freecalc/error.hpp"
#include "freecalc/lattice.hpp"
#include "freecalc/measures.hpp"
#include "freecalc/partition.hpp"
#include "freecalc/polynomials.hpp"
#include "freecalc/process.hpp"
#include "freecalc/transforms.hpp"
#include "freecalc/verify.hpp"

namespace freecalc::cli {

using json = nlohmann::json;

namespace {

json to_json(const SetPartition& p)
{
    return p.blocks();
}

json to_json(const QtPoly& p)
{
    json arr = json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(to_string(c));
    }
    return arr;
}

json to_json(const LaurentInN& l)
{
    json obj = json::object();
    for (const auto& [e, c] : l.terms()) {
        obj[std::to_string(e)] = to_string(c);
    }
    return obj;
}

json to_json(const SignedCombination& combo)
{
    json arr = json::array();
    for (const auto& [c, p] : combo) {
        arr.push_back({{"coefficient", to_string(c)}, {"partition", p.to_string()}});
    }
    return arr;
}

json to_json(const std::vector<Rational>& v)
{
    json arr = json::array();
    for (const auto& x : v) {
        arr.push_back(to_string(x));
    }
    return arr;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items)
{
    std::vector<Rational> out;
    out.reserve(items.size());
    for (const auto& s : items) {
        out.push_back(parse_rational(s));
    }
    return out;
}

struct ProcessOptions {
    std::string kind = "semicircular";
    std::string t = "1";
    bool centered = false;
    std::vector<std::string> generator;
    std::vector<std::string> cumulants;

    void attach(CLI::App* app)
    {
        app->add_option("--process", kind,
                        "semicircular | free-poisson (poisson) | compound-poisson (compound) | custom")
            ->capture_default_str();
        app->add_option("--t", t, "time parameter as p/q or an integer")->capture_default_str();
        app->add_flag("--centered", centered, "remove the first cumulant");
        app->add_option("--generator", generator, "generator moments m_1,m_2,... for compound-poisson")
            ->delimiter(',');
        app->add_option("--cumulants", cumulants, "base cumulants r_1,r_2,... for custom")->delimiter(',');
    }

    ProcessModel build() const
    {
        const Rational time = parse_rational(t);
        std::optional<ProcessModel> p;
        if (kind == "semicircular") {
            p = ProcessModel::semicircular(time);
        } else if (kind == "free-poisson" || kind == "poisson") {
            p = ProcessModel::free_poisson(time);
        } else if (kind == "compound-poisson" || kind == "compound") {
            if (generator.empty()) {
                throw InvalidArgument("compound-poisson needs --generator");
            }
            p = ProcessModel::compound_poisson(MomentSeq(parse_rationals(generator)), time);
        } else if (kind == "custom") {
            if (cumulants.empty()) {
                throw InvalidArgument("custom needs --cumulants");
            }
            p = ProcessModel::custom(CumulantSeq(parse_rationals(cumulants)), time);
        } else {
            throw InvalidArgument("unknown process '" + kind + "'");
        }
        return centered ? p->centered() : *p;
    }

    json echo() const
    {
        json j = {{"process", kind}, {"t", to_string(parse_rational(t))}, {"centered", centered}};
        if (!generator.empty()) {
            j["generator"] = to_json(parse_rationals(generator));
        }
        if (!cumulants.empty()) {
            j["cumulants"] = to_json(parse_rationals(cumulants));
        }
        return j;
    }
};

Lattice parse_lattice(const std::string& s)
{
    if (s == "all" || s == "p") {
        return Lattice::all;
    }
    if (s == "nc" || s == "noncrossing") {
        return Lattice::noncrossing;
    }
    throw InvalidArgument("unknown lattice '" + s + "'");
}

std::vector<int> parse_ints(const std::vector<std::string>& items)
{
    std::vector<int> out;
    for (const auto& s : items) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) {
            throw InvalidArgument("not an integer: '" + s + "'");
        }
        out.push_back(v);
    }
    return out;
}

// Writes records as NDJSON or as flattened CSV rows.
class Emitter {
public:
    Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

    void emit(const std::string& command, const json& inputs, const json& value)
    {
        const json record = {{"command", command}, {"inputs", inputs}, {"value", value}, {"exact", true}};
        if (format_ == "csv") {
            if (!header_) {
                out_ << "command,path,value\n";
                header_ = true;
            }
            const json flat = json{{"value", value}}.flatten();
            for (const auto& [path, v] : flat.items()) {
                out_ << csv_field(command) << ',' << csv_field(path) << ','
                     << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        } else {
            out_ << record.dump() << '\n';
        }
    }

    void set_format(std::string format) { format_ = std::move(format); }

private:
    static std::string csv_field(const std::string& s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string q = "\"";
        for (char c : s) {
            q += c;
            if (c == '"') {
                q += '"';
            }
        }
        return q + "\"";
    }

    std::ostream& out_;
    std::string format_;
    bool header_ = false;
};

json suite_json(const SuiteResult& s)
{
    return {{"suite", s.name}, {"passed", s.passed}, {"checks", s.checks}, {"failures", s.failures}};
}

json gram_json(const std::vector<std::vector<Rational>>& gram)
{
    json rows = json::array();
    for (const auto& row : gram) {
        rows.push_back(to_json(row));
    }
    return rows;
}

json diagonal_terms(const DiagonalPolynomial& p, const std::optional<Rational>& t)
{
    json arr = json::array();
    for (const auto& [w, c] : p.terms()) {
        arr.push_back({{"word", w}, {"coefficient", t ? json(to_string(c.evaluate(*t))) : to_json(c)}});
    }
    return arr;
}

json scalar_terms(const ScalarPolynomial& p, const std::optional<Rational>& t)
{
    json arr = json::array();
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const auto& c = p.coefficients()[k];
        if (c.is_zero()) {
            continue;
        }
        arr.push_back({{"power", k}, {"coefficient", t ? json(to_string(c.evaluate(*t))) : to_json(c)}});
    }
    return arr;
}

void add_format(CLI::App* app, std::string& format)
{
    app->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

} // namespace

const std::vector<CommandInfo>& command_registry()
{
    static const std::vector<CommandInfo> registry = {
        {"partitions enumerate", "enumerate_all, enumerate_noncrossing, enumerate_interval",
         {"partitions", "enumerate", "--n", "3", "--lattice", "nc"}},
        {"partitions info", "classify_blocks, is_noncrossing, is_interval, crossing_number, kreweras, opposite",
         {"partitions", "info", "1 3|2 4"}},
        {"partitions mobius", "mobius, mobius_row, lattice_interval",
         {"partitions", "mobius", "1|2|3", "1 2 3", "--lattice", "nc", "--row"}},
        {"partitions kreweras", "kreweras", {"partitions", "kreweras", "1 2|3"}},
        {"partitions crossing", "crossing_number", {"partitions", "crossing", "1 3|2 4"}},
        {"partitions combine", "meet, join, leq, direct_sum",
         {"partitions", "combine", "1 2|3", "1|2 3", "--op", "join"}},
        {"partitions reshape", "expand, thicken, repeat_sum",
         {"partitions", "reshape", "1 2|3", "--op", "expand", "--k", "1,2,1"}},
        {"transform m2c", "cumulants_from_moments", {"transform", "m2c", "--values", "1,2,5,14"}},
        {"transform c2m", "moments_from_cumulants, scale_time, center",
         {"transform", "c2m", "--values", "1,1,1,1", "--scale", "2"}},
        {"transform alt-moment", "alternating_moment",
         {"transform", "alt-moment", "--x-cumulants", "0,1,0", "--y-moments", "1,2,5", "--n", "3"}},
        {"transform s-transform", "r_series, s_from_r, r_from_s, cumulants_from_r_series",
         {"transform", "s-transform", "--values", "1,1,1,1,1"}},
        {"transform sandwich", "sandwich_transform", {"transform", "sandwich", "--values", "1,2,5"}},
        {"st", "st_expectation, st_in_terms_of_pr, multiplicativity_check, inner_singleton_vanishing",
         {"st", "1 4|2 3", "--process", "poisson", "--expand"}},
        {"pr", "pr_expectation, pr_in_terms_of_st, brownian_product_measure, poisson_product_measure",
         {"pr", "1 3|2", "--process", "poisson", "--expand"}},
        {"ito", "ito_expand, ito_expectation, ito_mobius_expand", {"ito", "1 2|3", "--process", "poisson"}},
        {"finite-n", "finite_n_laurent, finite_n_expectation, vanishing_order_report",
         {"finite-n", "1 3|2 4", "--process", "poisson", "--t", "1", "--symbolic"}},
        {"diagonal", "diagonal_cumulant, delta_word_moment, sandwich_limit",
         {"diagonal", "--n", "2", "--k", "2", "--word", "1,2", "--powers", "1,1", "--z", "1/2"}},
        {"polys", "ks_general, ks_centered, specialize_brownian, specialize_poisson, poisson_charlier, compound_ks, "
                  "orthogonality_gram",
         {"polys", "poisson-charlier", "--n-max", "3", "--check-orthogonality", "--process", "poisson",
          "--centered"}},
        {"verify orthogonality", "verify_orthogonality",
         {"verify", "orthogonality", "--process", "poisson", "--t", "1", "--max-n", "4", "--centered"}},
        {"verify mobius", "verify_mobius", {"verify", "mobius", "--max-n", "5"}},
        {"verify vanishing", "verify_vanishing", {"verify", "vanishing", "--max-n", "4"}},
        {"verify ks-consistency", "verify_ks_consistency, alpha, beta", {"verify", "ks-consistency"}},
        {"verify all", "all suites", {"verify", "all", "--max-n", "3"}},
    };
    return registry;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact calculus of free stochastic measures", "freecalc"};
    app.require_subcommand(1);

    std::string format = "json";
    Emitter emitter(out, "json");
    std::function<void()> action;
    bool failed = false;

    auto finish = [&](const std::string& fmt) { emitter.set_format(fmt); };

    // partitions
    auto* partitions = app.add_subcommand("partitions", "lattice operations on set partitions");
    partitions->require_subcommand(1);

    std::size_t enum_n = 3;
    std::string enum_lattice = "nc";
    bool enum_count = false;
    auto* enumerate = partitions->add_subcommand("enumerate", "list P(n), NC(n) or Int(n)");
    enumerate->add_option("--n", enum_n, "ground set size")->required();
    enumerate->add_option("--lattice", enum_lattice, "all | nc | interval")->capture_default_str();
    enumerate->add_flag("--count", enum_count, "emit only the count");
    add_format(enumerate, format);
    enumerate->callback([&] {
        action = [&] {
            finish(format);
            std::vector<SetPartition> list;
            if (enum_lattice == "interval") {
                list = interval_partitions(enum_n);
            } else if (parse_lattice(enum_lattice) == Lattice::all) {
                list = all_partitions(enum_n);
            } else {
                list = noncrossing_partitions(enum_n);
            }
            const json inputs = {{"n", enum_n}, {"lattice", enum_lattice}};
            if (enum_count) {
                emitter.emit("partitions enumerate", inputs, list.size());
                return;
            }
            for (const auto& p : list) {
                emitter.emit("partitions enumerate", inputs, {{"partition", p.to_string()}, {"blocks", to_json(p)}});
            }
        };
    });

    std::string info_pi;
    auto* info = partitions->add_subcommand("info", "block roles and lattice predicates");
    info->add_option("partition", info_pi, "e.g. \"1 3|2 4\"")->required();
    add_format(info, format);
    info->callback([&] {
        action = [&] {
            finish(format);
            const auto pi = parse_partition(info_pi);
            json v = {{"partition", pi.to_string()},
                      {"blocks", to_json(pi)},
                      {"size", pi.size()},
                      {"block_count", pi.block_count()},
                      {"noncrossing", is_noncrossing(pi)},
                      {"interval", is_interval(pi)},
                      {"opposite", opposite(pi).to_string()},
                      {"crossing_number", crossing_number(pi)}};
            if (is_noncrossing(pi)) {
                const auto roles = classify_blocks(pi);
                json r = json::array();
                for (BlockRole role : roles.roles) {
                    r.push_back(role == BlockRole::inner ? "inner" : "outer");
                }
                v["roles"] = r;
                v["inner_count"] = roles.inner_count;
                v["outer_count"] = roles.outer_count;
                v["inner_singleton"] = has_inner_singleton(pi);
                v["kreweras"] = kreweras(pi).to_string();
            }
            emitter.emit("partitions info", {{"partition", info_pi}}, v);
        };
    });

    std::string mob_sigma;
    std::string mob_pi;
    std::string mob_lattice = "nc";
    bool mob_row = false;
    auto* mob = partitions->add_subcommand("mobius", "Möbius function by zeta inversion");
    mob->add_option("sigma", mob_sigma, "lower partition")->required();
    mob->add_option("pi", mob_pi, "upper partition")->required();
    mob->add_option("--lattice", mob_lattice, "all | nc")->capture_default_str();
    mob->add_flag("--row", mob_row, "list mu(sigma, tau) for every tau in the interval");
    add_format(mob, format);
    mob->callback([&] {
        action = [&] {
            finish(format);
            const auto sigma = parse_partition(mob_sigma);
            const auto pi = parse_partition(mob_pi, sigma.size());
            const Lattice lattice = parse_lattice(mob_lattice);
            const json inputs = {{"sigma", mob_sigma}, {"pi", mob_pi}, {"lattice", mob_lattice}};
            if (mob_row) {
                emitter.emit("partitions mobius", inputs, to_json(mobius_row(lattice, sigma, pi)));
            } else {
                emitter.emit("partitions mobius", inputs, to_string(mobius(lattice, sigma, pi)));
            }
        };
    });

    std::string krew_pi;
    auto* krew = partitions->add_subcommand("kreweras", "Kreweras complement");
    krew->add_option("partition", krew_pi)->required();
    add_format(krew, format);
    krew->callback([&] {
        action = [&] {
            finish(format);
            emitter.emit("partitions kreweras", {{"partition", krew_pi}}, to_json(kreweras(parse_partition(krew_pi))));
        };
    });

    std::string cross_pi;
    auto* cross = partitions->add_subcommand("crossing", "crossing number");
    cross->add_option("partition", cross_pi)->required();
    add_format(cross, format);
    cross->callback([&] {
        action = [&] {
            finish(format);
            emitter.emit("partitions crossing", {{"partition", cross_pi}}, crossing_number(parse_partition(cross_pi)));
        };
    });

    std::string comb_a;
    std::string comb_b;
    std::string comb_op = "meet";
    auto* comb = partitions->add_subcommand("combine", "meet, join, order test or direct sum of two partitions");
    comb->add_option("a", comb_a)->required();
    comb->add_option("b", comb_b)->required();
    comb->add_option("--op", comb_op, "meet | join | leq | direct-sum")
        ->check(CLI::IsMember({"meet", "join", "leq", "direct-sum"}))
        ->capture_default_str();
    add_format(comb, format);
    comb->callback([&] {
        action = [&] {
            finish(format);
            const auto a = parse_partition(comb_a);
            const json inputs = {{"a", comb_a}, {"b", comb_b}, {"op", comb_op}};
            if (comb_op == "direct-sum") {
                emitter.emit("partitions combine", inputs, to_json(direct_sum(a, parse_partition(comb_b))));
                return;
            }
            const auto b = parse_partition(comb_b, a.size());
            if (comb_op == "leq") {
                emitter.emit("partitions combine", inputs, leq(a, b));
            } else {
                emitter.emit("partitions combine", inputs, to_json(comb_op == "meet" ? meet(a, b) : join(a, b)));
            }
        };
    });

    std::string reshape_pi;
    std::string reshape_op = "expand";
    std::vector<std::string> reshape_k;
    auto* reshape = partitions->add_subcommand("reshape", "expand by a vector, thicken or repeat");
    reshape->add_option("partition", reshape_pi)->required();
    reshape->add_option("--op", reshape_op, "expand | thicken | repeat")
        ->check(CLI::IsMember({"expand", "thicken", "repeat"}))
        ->capture_default_str();
    reshape->add_option("--k", reshape_k, "expansion vector, or a single integer")->delimiter(',')->required();
    add_format(reshape, format);
    reshape->callback([&] {
        action = [&] {
            finish(format);
            const auto pi = parse_partition(reshape_pi);
            const auto k = parse_ints(reshape_k);
            SetPartition result;
            if (reshape_op == "expand") {
                result = expand(pi, k);
            } else {
                if (k.size() != 1 || k[0] < 1) {
                    throw InvalidArgument("--k must be a single positive integer for " + reshape_op);
                }
                result = reshape_op == "thicken" ? thicken(pi, k[0]) : repeat_sum(pi, static_cast<std::size_t>(k[0]));
            }
            emitter.emit("partitions reshape", {{"partition", reshape_pi}, {"op", reshape_op}, {"k", k}},
                         to_json(result));
        };
    });

    // transform
    auto* transform = app.add_subcommand("transform", "moment and cumulant transforms");
    transform->require_subcommand(1);

    std::vector<std::string> tr_values;
    std::string tr_scale;
    bool tr_center = false;
    auto add_values = [&](CLI::App* sub, const char* what) {
        sub->add_option("--values", tr_values, what)->delimiter(',')->required();
        add_format(sub, format);
    };

    auto* m2c = transform->add_subcommand("m2c", "free cumulants from moments");
    add_values(m2c, "moments m_1,m_2,...");
    m2c->callback([&] {
        action = [&] {
            finish(format);
            const auto r = cumulants_from_moments(MomentSeq(parse_rationals(tr_values)));
            emitter.emit("transform m2c", {{"values", to_json(parse_rationals(tr_values))}}, to_json(r.values()));
        };
    });

    auto* c2m = transform->add_subcommand("c2m", "moments from free cumulants");
    add_values(c2m, "cumulants r_1,r_2,...");
    c2m->add_option("--scale", tr_scale, "multiply the cumulants by this time first");
    c2m->add_flag("--center", tr_center, "drop r_1 first");
    c2m->callback([&] {
        action = [&] {
            finish(format);
            CumulantSeq r(parse_rationals(tr_values));
            if (!tr_scale.empty()) {
                r = scale_time(r, parse_rational(tr_scale));
            }
            if (tr_center) {
                r = center(r);
            }
            json inputs = {{"values", to_json(parse_rationals(tr_values))}, {"center", tr_center}};
            if (!tr_scale.empty()) {
                inputs["scale"] = to_string(parse_rational(tr_scale));
            }
            emitter.emit("transform c2m", inputs, to_json(moments_from_cumulants(r).values()));
        };
    });

    std::vector<std::string> alt_x;
    std::vector<std::string> alt_y;
    std::size_t alt_n = 1;
    auto* alt = transform->add_subcommand("alt-moment", "phi(x1 y1 ... xn yn) for free x, y");
    alt->add_option("--x-cumulants", alt_x)->delimiter(',')->required();
    alt->add_option("--y-moments", alt_y)->delimiter(',')->required();
    alt->add_option("--n", alt_n)->required();
    add_format(alt, format);
    alt->callback([&] {
        action = [&] {
            finish(format);
            const auto x = parse_rationals(alt_x);
            const auto y = parse_rationals(alt_y);
            const auto v = alternating_moment(CumulantSeq(x), MomentSeq(y), alt_n);
            emitter.emit("transform alt-moment", {{"x_cumulants", to_json(x)}, {"y_moments", to_json(y)}, {"n", alt_n}},
                         to_string(v));
        };
    });

    bool s_inverse = false;
    auto* strans = transform->add_subcommand("s-transform", "S-transform from cumulants, or back with --inverse");
    add_values(strans, "cumulants r_1,... (or S coefficients with --inverse)");
    strans->add_flag("--inverse", s_inverse, "read S(w) coefficients and return cumulants");
    strans->callback([&] {
        action = [&] {
            finish(format);
            const auto v = parse_rationals(tr_values);
            const json inputs = {{"values", to_json(v)}, {"inverse", s_inverse}};
            if (s_inverse) {
                const auto r = cumulants_from_r_series(r_from_s(SeriesQ(v)));
                emitter.emit("transform s-transform", inputs, to_json(r.values()));
            } else {
                const auto s = s_from_r(r_series(CumulantSeq(v)));
                emitter.emit("transform s-transform", inputs, to_json(s.coefficients()));
            }
        };
    });

    auto* sandwich = transform->add_subcommand("sandwich", "cumulants of s x s with s standard semicircular");
    add_values(sandwich, "moments of x");
    sandwich->callback([&] {
        action = [&] {
            finish(format);
            const auto v = parse_rationals(tr_values);
            emitter.emit("transform sandwich", {{"values", to_json(v)}},
                         to_json(sandwich_transform(MomentSeq(v)).values()));
        };
    });

    // st, pr, ito, finite-n, diagonal
    ProcessOptions proc;
    std::string meas_pi;
    bool meas_expand = false;

    auto* st = app.add_subcommand("st", "phi(St_pi)");
    st->add_option("partition", meas_pi)->required();
    st->add_flag("--expand", meas_expand, "also list St_pi in terms of Pr (pi noncrossing)");
    proc.attach(st);
    add_format(st, format);
    st->callback([&] {
        action = [&] {
            finish(format);
            const auto pi = parse_partition(meas_pi);
            const auto p = proc.build();
            json v = {{"partition", pi.to_string()}, {"expectation", to_string(st_expectation(pi, p))}};
            if (is_noncrossing(pi)) {
                v["multiplicative"] = multiplicativity_check(pi, p);
                if (p.is_centered()) {
                    v["centered_value"] = to_string(inner_singleton_vanishing(pi, p));
                }
                if (meas_expand) {
                    v["in_terms_of_pr"] = to_json(st_in_terms_of_pr(pi));
                }
            }
            json inputs = proc.echo();
            inputs["partition"] = meas_pi;
            emitter.emit("st", inputs, v);
        };
    });

    auto* pr = app.add_subcommand("pr", "phi(Pr_pi)");
    pr->add_option("partition", meas_pi)->required();
    pr->add_flag("--expand", meas_expand, "also list Pr_pi in terms of St (pi noncrossing)");
    proc.attach(pr);
    add_format(pr, format);
    pr->callback([&] {
        action = [&] {
            finish(format);
            const auto pi = parse_partition(meas_pi);
            const auto p = proc.build();
            json v = {{"partition", pi.to_string()}, {"expectation", to_string(pr_expectation(pi, p))}};
            if (is_noncrossing(pi)) {
                if (meas_expand) {
                    v["in_terms_of_st"] = to_json(pr_in_terms_of_st(pi));
                }
                if (p.kind() == ProcessKind::semicircular && !p.is_centered()) {
                    const auto form = brownian_product_measure(pi);
                    v["product_form"] = {{"zero", form.vanishes()},
                                         {"singletons", form.singletons},
                                         {"pairs", form.pairs},
                                         {"larger", form.larger},
                                         {"expectation", to_string(brownian_product_expectation(form, p.time()))}};
                }
                if (p.kind() == ProcessKind::free_poisson && !p.is_centered()) {
                    if (const auto form = poisson_product_measure(pi)) {
                        v["product_form"] = {
                            {"outer", form->outer},
                            {"inner", form->inner},
                            {"expectation", to_string(poisson_product_expectation(*form, p.time()))}};
                    } else {
                        v["product_form"] = nullptr;
                    }
                }
            }
            json inputs = proc.echo();
            inputs["partition"] = meas_pi;
            emitter.emit("pr", inputs, v);
        };
    });

    std::string ito_lattice;
    auto* ito = app.add_subcommand("ito", "expectation of the ordered psi-product over the blocks of pi");
    ito->add_option("partition", meas_pi)->required();
    ito->add_option("--lattice", ito_lattice, "Möbius lattice for the Pr form: all | nc (default by pi)");
    proc.attach(ito);
    add_format(ito, format);
    ito->callback([&] {
        action = [&] {
            finish(format);
            const auto pi = parse_partition(meas_pi);
            const auto p = proc.build();
            const auto mob = ito_lattice.empty() ? ito_mobius_expand(pi) : ito_mobius_expand(pi, parse_lattice(ito_lattice));
            Rational via_pr = 0;
            for (const auto& [c, sigma] : mob) {
                via_pr += c * pr_expectation(sigma, p);
            }
            json expansion = json::array();
            for (const auto& sigma : ito_expand(pi)) {
                expansion.push_back(sigma.to_string());
            }
            const json v = {{"partition", pi.to_string()},
                            {"expectation", to_string(ito_expectation(pi, p))},
                            {"st_expansion", expansion},
                            {"mobius_form", to_json(mob)},
                            {"mobius_form_expectation", to_string(via_pr)}};
            json inputs = proc.echo();
            inputs["partition"] = meas_pi;
            emitter.emit("ito", inputs, v);
        };
    });

    std::vector<std::string> fn_k;
    std::optional<std::size_t> fn_n;
    bool fn_symbolic = false;
    auto* finite = app.add_subcommand("finite-n", "exact finite-N expectation of the pi-diagonal sum");
    finite->add_option("partition", meas_pi)->required();
    finite->add_option("--k", fn_k, "powers k_1,...,k_n (default all 1)")->delimiter(',');
    finite->add_option("--N", fn_n, "evaluate at this refinement");
    finite->add_flag("--symbolic", fn_symbolic, "emit the Laurent expansion in N");
    proc.attach(finite);
    add_format(finite, format);
    finite->callback([&] {
        action = [&] {
            finish(format);
            const auto pi = parse_partition(meas_pi);
            const auto p = proc.build();
            const auto k = fn_k.empty() ? std::vector<int>(pi.size(), 1) : parse_ints(fn_k);
            const auto laurent = finite_n_laurent(pi, k, p);
            json v = {{"partition", pi.to_string()}};
            if (fn_symbolic || !fn_n) {
                v["laurent"] = to_json(laurent);
                const auto limit = laurent.limit_at_infinity();
                v["limit"] = limit ? json(to_string(*limit)) : json(nullptr);
                const auto top = laurent.max_exponent();
                v["max_exponent"] = top ? json(*top) : json(nullptr);
            }
            if (fn_n) {
                v["value"] = to_string(finite_n_expectation(pi, k, p, *fn_n));
            }
            if (pi.size() <= kCrossingNumberCap && p.kind() == ProcessKind::free_poisson && p.time() == 1 &&
                !p.is_centered() && std::all_of(k.begin(), k.end(), [](int x) { return x == 1; })) {
                const auto report = vanishing_order_report(pi);
                v["crossing_number"] = report.crossing_number;
                v["vanishing_order_holds"] = report.holds;
            }
            json inputs = proc.echo();
            inputs["partition"] = meas_pi;
            inputs["k"] = k;
            if (fn_n) {
                inputs["N"] = *fn_n;
            }
            emitter.emit("finite-n", inputs, v);
        };
    });

    std::optional<std::size_t> diag_n;
    std::optional<std::size_t> diag_k;
    std::vector<std::string> diag_word;
    std::vector<std::string> diag_powers;
    std::vector<std::string> diag_z;
    auto* diagonal = app.add_subcommand("diagonal", "cumulants and moments of diagonal measures");
    diagonal->add_option("--n", diag_n, "cumulant order n of r_n(Delta_k)");
    diagonal->add_option("--k", diag_k, "diagonal index k of r_n(Delta_k)");
    diagonal->add_option("--word", diag_word, "Delta-word k_1,...,k_m for phi(Delta_k1 ... Delta_km)")->delimiter(',');
    diagonal->add_option("--powers", diag_powers, "m_1,...,m_{j+1} for the sandwich limit")->delimiter(',');
    diagonal->add_option("--z", diag_z, "phi(Z_1),...,phi(Z_j) for the sandwich limit")->delimiter(',');
    proc.attach(diagonal);
    add_format(diagonal, format);
    diagonal->callback([&] {
        action = [&] {
            finish(format);
            const auto p = proc.build();
            json v = json::object();
            json inputs = proc.echo();
            if (diag_n.has_value() != diag_k.has_value()) {
                throw InvalidArgument("--n and --k go together");
            }
            if (diag_n) {
                inputs["n"] = *diag_n;
                inputs["k"] = *diag_k;
                v["cumulant"] = to_string(diagonal_cumulant(*diag_n, *diag_k, p));
            }
            if (!diag_word.empty()) {
                const auto w = parse_ints(diag_word);
                inputs["word"] = w;
                v["word_moment"] = to_string(delta_word_moment(w, p));
            }
            if (!diag_powers.empty()) {
                const auto m = parse_ints(diag_powers);
                const auto z = parse_rationals(diag_z);
                inputs["powers"] = m;
                inputs["z"] = to_json(z);
                const auto lim = sandwich_limit(m, z, p);
                v["sandwich"] = {{"coefficient", to_string(lim.coefficient)},
                                 {"diagonal_index", lim.diagonal_index},
                                 {"expectation", to_string(lim.expectation)}};
            }
            if (v.empty()) {
                throw InvalidArgument("diagonal needs --n/--k, --word or --powers");
            }
            emitter.emit("diagonal", inputs, v);
        };
    });

    // polys
    std::string poly_family;
    std::size_t poly_min = 0;
    std::size_t poly_max = 4;
    std::string poly_t;
    std::string poly_format = "json";
    bool poly_orth = false;
    auto* polys = app.add_subcommand("polys", "free Kailath-Segall polynomial families");
    polys->add_option("family", poly_family, "general | centered | brownian | poisson | poisson-charlier | compound")
        ->check(CLI::IsMember({"general", "centered", "brownian", "poisson", "poisson-charlier", "compound"}))
        ->required();
    polys->add_option("--n-min", poly_min)->capture_default_str();
    polys->add_option("--n-max", poly_max)->capture_default_str();
    polys->add_option("--t", poly_t, "substitute this value for t");
    polys->add_option("--format", poly_format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    polys->add_flag("--check-orthogonality", poly_orth, "print the Gram matrix of psi_0..psi_{n-max}");
    polys->add_option("--process", proc.kind, "process for --check-orthogonality")->capture_default_str();
    polys->add_flag("--centered", proc.centered, "center the process for --check-orthogonality");
    polys->add_option("--generator", proc.generator, "generator moments for compound")->delimiter(',');
    polys->add_option("--cumulants", proc.cumulants, "base cumulants for a custom process")->delimiter(',');
    polys->callback([&] {
        action = [&] {
            if (poly_min > poly_max) {
                throw InvalidArgument("--n-min exceeds --n-max");
            }
            const std::optional<Rational> t = poly_t.empty() ? std::nullopt : std::optional(parse_rational(poly_t));
            std::vector<std::pair<std::size_t, json>> rows;
            std::vector<std::pair<std::size_t, std::string>> texts;
            std::optional<MomentSeq> generator;
            if (poly_family == "compound") {
                if (proc.generator.empty()) {
                    throw InvalidArgument("compound needs --generator");
                }
                generator = MomentSeq(parse_rationals(proc.generator));
            }
            for (std::size_t n = poly_min; n <= poly_max; ++n) {
                if (poly_family == "general" || poly_family == "centered" || poly_family == "compound") {
                    DiagonalPolynomial p = poly_family == "general"    ? ks_general(n)
                                           : poly_family == "centered" ? ks_centered(n)
                                                                       : compound_ks(n, *generator);
                    if (t) {
                        p = p.at_time(*t);
                    }
                    rows.emplace_back(n, diagonal_terms(p, std::nullopt));
                    texts.emplace_back(n, p.to_string());
                } else {
                    ScalarPolynomial p = poly_family == "brownian" ? specialize_brownian(n)
                                         : poly_family == "poisson" ? specialize_poisson(n)
                                                                    : poisson_charlier(n);
                    if (t) {
                        p = p.at_time(*t);
                    }
                    rows.emplace_back(n, scalar_terms(p, std::nullopt));
                    texts.emplace_back(n, p.to_string());
                }
            }
            json inputs = {{"family", poly_family}, {"n_min", poly_min}, {"n_max", poly_max}};
            if (t) {
                inputs["t"] = to_string(*t);
            }
            if (poly_format == "json") {
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    emitter.emit("polys", inputs,
                                 {{"n", rows[i].first}, {"terms", rows[i].second}, {"text", texts[i].second}});
                }
            } else if (poly_format == "csv") {
                out << "family,n,monomial,coefficient\n";
                for (const auto& [n, terms] : rows) {
                    for (const auto& term : terms) {
                        std::string mono;
                        if (term.contains("word")) {
                            for (int k : term["word"]) {
                                mono += (mono.empty() ? "D" : " D") + std::to_string(k);
                            }
                        } else {
                            const auto power = term["power"].get<std::size_t>();
                            mono = power == 0 ? "1" : power == 1 ? "X" : "X^" + std::to_string(power);
                        }
                        std::string coeff;
                        const auto& c = term["coefficient"];
                        if (c.is_string()) {
                            coeff = c.get<std::string>();
                        } else {
                            std::vector<Rational> cs;
                            for (const auto& x : c) {
                                cs.push_back(parse_rational(x.get<std::string>()));
                            }
                            coeff = QtPoly(cs).to_string();
                        }
                        out << poly_family << ',' << n << ',' << (mono.empty() ? "1" : mono) << ',' << coeff << '\n';
                    }
                }
            } else {
                for (const auto& [n, text] : texts) {
                    out << "psi_" << std::left << std::setw(3) << n << " = " << text << '\n';
                }
            }
            if (poly_orth) {
                // Unlike `verify orthogonality`, the process is taken as given.
                const auto p = proc.build();
                const auto gram = orthogonality_gram(poly_max, p);
                bool diagonal = true;
                for (std::size_t i = 0; i <= poly_max; ++i) {
                    for (std::size_t j = 0; j <= poly_max; ++j) {
                        diagonal = diagonal && gram[i][j] == (i == j ? power(p.cumulant_at(2), i) : Rational(0));
                    }
                }
                if (poly_format == "text") {
                    out << "gram (" << p.name() << ", t = " << to_string(p.time()) << ")\n";
                    for (const auto& row : gram) {
                        for (std::size_t j = 0; j < row.size(); ++j) {
                            out << (j ? " " : "") << std::setw(8) << to_string(row[j]);
                        }
                        out << '\n';
                    }
                } else {
                    Emitter gram_out(out, poly_format);
                    gram_out.emit("polys gram", proc.echo(), {{"gram", gram_json(gram)}, {"passed", diagonal}});
                }
                failed = !diagonal;
            }
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->require_subcommand(1);
    std::size_t ver_max_n = 0;
    auto add_verify = [&](const std::string& name, const std::string& desc, bool uses_process) {
        auto* sub = verify->add_subcommand(name, desc);
        sub->add_option("--max-n", ver_max_n, "size bound (suite default when omitted)");
        if (uses_process) {
            proc.attach(sub);
        }
        add_format(sub, format);
        return sub;
    };
    auto run_suite = [&](const SuiteResult& s, json extra = json::object()) {
        json v = suite_json(s);
        v.update(extra);
        emitter.emit("verify " + s.name, {{"max_n", ver_max_n}}, v);
        failed = failed || !s.passed;
    };
    auto orth_suite = [&] {
        const auto r = verify_orthogonality(proc.build(), ver_max_n ? ver_max_n : 5);
        run_suite(r.suite, {{"gram", gram_json(r.gram)}, {"process", proc.echo()}});
    };
    add_verify("orthogonality", "Gram matrix of the Kailath-Segall polynomials", true)->callback([&] {
        action = [&] {
            finish(format);
            orth_suite();
        };
    });
    add_verify("mobius", "closed forms of mu_P and mu_NC", false)->callback([&] {
        action = [&] {
            finish(format);
            run_suite(verify_mobius(ver_max_n ? ver_max_n : 7));
        };
    });
    add_verify("vanishing", "finite-N vanishing of crossing partitions", false)->callback([&] {
        action = [&] {
            finish(format);
            run_suite(verify_vanishing(ver_max_n ? ver_max_n : 6));
        };
    });
    add_verify("ks-consistency", "Kailath-Segall identities", false)->callback([&] {
        action = [&] {
            finish(format);
            run_suite(verify_ks_consistency());
        };
    });
    add_verify("all", "every suite", true)->callback([&] {
        action = [&] {
            finish(format);
            run_suite(verify_mobius(ver_max_n ? ver_max_n : 7));
            run_suite(verify_vanishing(ver_max_n ? ver_max_n : 6));
            run_suite(verify_ks_consistency());
            const std::vector<ProcessModel> models = {
                ProcessModel::semicircular(parse_rational(proc.t)),
                ProcessModel::free_poisson(parse_rational(proc.t)).centered(),
                ProcessModel::compound_poisson(MomentSeq({1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012}),
                                               parse_rational(proc.t))
                    .centered(),
            };
            for (const auto& m : models) {
                const auto r = verify_orthogonality(m, ver_max_n ? std::min<std::size_t>(ver_max_n, 6) : 5);
                run_suite(r.suite, {{"process", m.name()}});
            }
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : argument_error;
    }
    try {
        if (action) {
            action();
        }
    } catch (const CapExceeded& e) {
        err << "freecalc: " << e.what() << '\n';
        return cap_exceeded;
    } catch (const Error& e) {
        err << "freecalc: " << e.what() << '\n';
        return argument_error;
    } catch (const std::invalid_argument& e) {
        err << "freecalc: " << e.what() << '\n';
        return argument_error;
    }
    return failed ? verification_failed : ok;
}

} // namespace freecalc::cli

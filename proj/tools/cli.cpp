#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "turanlab/bounds.hpp"
#include "turanlab/classes.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/io.hpp"
#include "turanlab/levelsets.hpp"
#include "turanlab/search.hpp"
#include "turanlab/supnorm.hpp"

namespace turan::cli {

namespace {

using io::format_double;
using io::Json;

struct Options {
    int n = 0;
    int k = 0;
    bool pin = false;
    std::uint64_t seed = 0;
    long budget = 20000;
    int restarts = 32;
    double delta = 0.0;
    double alpha = 0.0;
    double epsilon = 0.0;
    int m = 1;
    int deg = -1;
    std::string poly;
    std::string zeros;
    std::vector<double> interval{-1.0, 1.0};
    std::string out;
    std::string format;
    std::string family = "thm24";
    std::string variant = "incomplete";
    std::string dump_dir;
    std::string trace;
    std::optional<double> c1;
    std::optional<double> c2;
    std::vector<int> n_list;
    std::vector<int> k_list;
};

// Exactly one of --poly / --zeros.
void add_poly(CLI::App* sub, Options& o) {
    auto* group = sub->add_option_group("polynomial", "Input polynomial (one of)");
    group->add_option("--poly", o.poly, "Polynomial JSON file");
    group->add_option("--zeros", o.zeros, "Zeros as a JSON array of [re, im], leading coefficient 1");
    group->require_option(1);
    sub->add_option("--deg", o.deg, "Expected degree");
}

void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Write output to this path instead of stdout");
}

void add_search_flags(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--budget", o.budget, "Objective evaluations per restart")->check(CLI::PositiveNumber);
    sub->add_option("--restarts", o.restarts, "Number of random restarts")->check(CLI::PositiveNumber);
}

// Polynomial from --poly, or from --zeros (leading coefficient 1) with an
// optional --deg consistency check.
Polynomial input_polynomial(const Options& o) {
    if (!o.poly.empty()) {
        auto p = io::read_polynomial(o.poly);
        if (o.deg >= 0 && p.degree() != o.deg) {
            throw InvalidArgument("--deg " + std::to_string(o.deg) + " does not match the polynomial's degree " +
                                  std::to_string(p.degree()));
        }
        return p;
    }
    if (o.zeros.empty()) throw InvalidArgument("a polynomial is required: pass --poly or --zeros");
    Json j;
    try {
        j = Json::parse(o.zeros);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("--zeros is not valid JSON: ") + e.what());
    }
    auto p = io::polynomial_from_json(Json{{"leading", Json::array({1.0, 0.0})}, {"zeros", j}});
    if (o.deg >= 0 && p.degree() != o.deg) {
        throw InvalidArgument("--deg " + std::to_string(o.deg) + " does not match the " +
                              std::to_string(p.degree()) + " zeros given");
    }
    return p;
}

Interval input_interval(const Options& o) { return Interval(o.interval[0], o.interval[1]); }

std::string ratio_output(const Options& o) {
    const auto p = input_polynomial(o);
    const auto r = turan_ratio(p, input_interval(o), 1e-12);
    if (o.format == "json") return io::to_json(r).dump(2) + "\n";
    return "ratio,err,method\n" + format_double(r.value) + "," + format_double(r.err) + "," + to_string(r.method) +
           "\n";
}

std::string verdict_output(const Options& o) {
    const auto p = input_polynomial(o);
    const auto v = evaluate_verdict(p, ClassSpec(o.n, o.k, o.pin));
    if (o.format == "json") return io::to_json(v).dump(2) + "\n";
    std::ostringstream os;
    io::write_verdict_csv(os, v);
    return os.str();
}

std::string sample_output(const Options& o) {
    const auto p = sample(ClassSpec(o.n, o.k, o.pin), o.seed);
    return io::to_json(p).dump() + "\n";
}

std::string levelset_output(const LevelSetReport& r, const Options& o) {
    if (o.format == "csv") {
        return "measure,err,bound,parameter,satisfied\n" + format_double(r.measure.value) + "," +
               format_double(r.measure.err) + "," + format_double(r.bound) + "," + format_double(r.parameter) + "," +
               (r.satisfied ? "true" : "false") + "\n";
    }
    return io::to_json(r).dump(2) + "\n";
}

std::string decay_output(const Options& o) {
    const auto p = input_polynomial(o);
    DecayReport r;
    if (o.variant == "incomplete") {
        r = incomplete_decay_check(p, o.n, o.k);
    } else {
        r = flipped_decay_check(p, o.n, o.k);
    }
    if (o.format == "csv") {
        return "status,max_violation,window_lo,window_hi\n" + std::string(to_string(r.status)) + "," +
               format_double(r.max_violation) + "," + format_double(r.window.lo) + "," + format_double(r.window.hi) +
               "\n";
    }
    return io::to_json(r).dump(2) + "\n";
}

SearchConfig search_config(const Options& o) {
    SearchConfig cfg;
    cfg.seed = o.seed;
    cfg.budget = o.budget;
    cfg.restarts = o.restarts;
    cfg.c1 = o.c1;
    cfg.c2 = o.c2;
    return cfg;
}

std::string search_output(const Options& o) {
    const auto r = minimize_ratio(ClassSpec(o.n, o.k, o.pin), search_config(o));
    if (!o.trace.empty()) {
        std::ofstream t(o.trace);
        if (!t) throw InvalidArgument("cannot write trace file: " + o.trace);
        io::write_trace_csv(t, r.trace);
    }
    if (o.format == "csv") {
        std::ostringstream os;
        os << "n,k,ratio,err,cached_ratio,lower,upper,within_bracket,restarts_used,evals\n"
           << o.n << ',' << o.k << ',' << format_double(r.ratio.value) << ',' << format_double(r.ratio.err) << ','
           << format_double(r.cached_ratio) << ',' << format_double(r.bracket.lower) << ','
           << (r.bracket.upper ? format_double(*r.bracket.upper) : "") << ','
           << (r.within_bracket ? "true" : "false") << ',' << r.restarts_used << ',' << r.evaluations << '\n';
        return os.str();
    }
    Json j = io::to_json(r);
    j["n"] = o.n;
    j["k"] = o.k;
    j["pin"] = o.pin;
    return j.dump(2) + "\n";
}

std::string sweep_output(const Options& o) {
    const auto table = frontier_sweep(o.n_list, o.k_list, search_config(o));
    if (o.format == "json") return io::to_json(table).dump(2) + "\n";
    std::ostringstream os;
    io::write_sweep_csv(os, table);
    return os.str();
}

std::string construct_output(const Options& o) {
    ConstructionReport r;
    if (o.family == "thm24") {
        r = thm24_construct(o.n, o.k, search_config(o));
    } else if (o.family == "turan-even") {
        r = classical_family(ClassicalFamily::turan_even, o.m);
    } else {
        r = classical_family(ClassicalFamily::turan_odd, o.m);
    }
    if (!o.dump_dir.empty()) {
        for (const auto& [name, p] : r.intermediate) io::write_polynomial(o.dump_dir + "/" + name + ".json", p);
    }
    if (o.format == "csv") {
        return "name,ratio,err,predicted_bound,member\n" + r.name + "," + format_double(r.ratio.value) + "," +
               format_double(r.ratio.err) + "," + format_double(r.predicted_bound) + "," +
               (r.class_check.member ? "true" : "false") + "\n";
    }
    return io::to_json(r).dump(2) + "\n";
}

std::string remark_output(const Options& o) {
    const auto r = remark_family(o.epsilon, o.n);
    if (o.format == "csv") {
        return "m,n,ratio,err,predicted_bound,maximizer,predicted_maximizer,norm\n" + std::to_string(*r.m) + "," +
               std::to_string(o.n) + "," + format_double(r.ratio.value) + "," + format_double(r.ratio.err) + "," +
               format_double(r.predicted_bound) + "," + format_double(*r.maximizer) + "," +
               format_double(*r.predicted_maximizer) + "," + format_double(*r.norm) + "\n";
    }
    return io::to_json(r).dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Reverse Markov (Turan-type) inequality laboratory", "turanlab"};
    app.require_subcommand(1);

    auto* ratio = app.add_subcommand("ratio", "||P'|| / ||P|| on an interval");
    add_poly(ratio, o);
    ratio->add_option("--interval", o.interval, "Interval endpoints lo hi")->expected(2);
    add_format(ratio, o);

    auto* verdict = app.add_subcommand("verdict", "Check a member of F_{n,k} against every applicable bound");
    add_poly(verdict, o);
    verdict->add_option("--n", o.n, "Degree bound n")->required();
    verdict->add_option("--k", o.k, "Free zeros k")->required();
    verdict->add_flag("--pin", o.pin, "Require a zero in [-1, 1]");
    add_format(verdict, o);

    auto* samp = app.add_subcommand("sample", "Random member of F_{n,k} as polynomial JSON");
    samp->add_option("--n", o.n, "Degree bound n")->required();
    samp->add_option("--k", o.k, "Free zeros k")->required();
    samp->add_flag("--pin", o.pin, "Require a zero in [-1, 1]");
    samp->add_option("--seed", o.seed, "Random seed");
    samp->add_option("--out", o.out, "Write output to this path instead of stdout");

    auto* l31 = app.add_subcommand("lemma31", "Measure of {|Q'/Q| <= n delta}");
    add_poly(l31, o);
    l31->add_option("--delta", o.delta, "delta")->required();
    l31->add_option("--interval", o.interval, "Ambient interval lo hi")->expected(2);
    add_format(l31, o);

    auto* l32 = app.add_subcommand("lemma32", "Measure of {|R'/R| >= alpha}");
    add_poly(l32, o);
    l32->add_option("--alpha", o.alpha, "alpha")->required();
    l32->add_option("--interval", o.interval, "Ambient interval lo hi")->expected(2);
    add_format(l32, o);

    auto* decay = app.add_subcommand("decay", "Decay of incomplete polynomials on [0, 1]");
    add_poly(decay, o);
    decay->add_option("--n", o.n, "n")->required();
    decay->add_option("--k", o.k, "k")->required();
    decay->add_option("--variant", o.variant, "incomplete or flipped")
        ->check(CLI::IsMember({"incomplete", "flipped"}));
    add_format(decay, o);

    auto* search = app.add_subcommand("search", "Estimate f(n,k) by restarted simplex search");
    search->add_option("--n", o.n, "Degree bound n")->required();
    search->add_option("--k", o.k, "Free zeros k")->required();
    search->add_flag("--pin", o.pin, "Require a zero in [-1, 1]");
    add_search_flags(search, o);
    search->add_option("--c1", o.c1, "Lower bracket constant");
    search->add_option("--c2", o.c2, "Upper bracket constant");
    search->add_option("--trace", o.trace, "Write the best-so-far trace as CSV");
    add_format(search, o);

    auto* sweep = app.add_subcommand("sweep", "Grid of searches over pinned classes");
    sweep->add_option("--n", o.n_list, "Degree bounds")->required()->expected(1, -1);
    sweep->add_option("--k", o.k_list, "Free-zero counts")->required()->expected(1, -1);
    add_search_flags(sweep, o);
    add_format(sweep, o);

    auto* construct = app.add_subcommand("construct", "Explicit polynomial families");
    construct->add_option("--family", o.family, "thm24, turan-even or turan-odd")
        ->check(CLI::IsMember({"thm24", "turan-even", "turan-odd"}));
    construct->add_option("--n", o.n, "n (thm24)");
    construct->add_option("--k", o.k, "k (thm24)");
    construct->add_option("--m", o.m, "m (classical families)");
    construct->add_option("--dump-dir", o.dump_dir, "Write each intermediate polynomial as <name>.json here");
    add_search_flags(construct, o);
    add_format(construct, o);

    auto* remark = app.add_subcommand("remark", "The (z^m - 1)^n family");
    remark->add_option("--epsilon", o.epsilon, "epsilon in (0, 1]")->required();
    remark->add_option("--n", o.n, "n")->required();
    add_format(remark, o);

    std::vector<const char*> argv{"turanlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::string text;
        if (*ratio) {
            text = ratio_output(o);
        } else if (*verdict) {
            if (o.format.empty()) o.format = "csv";
            text = verdict_output(o);
        } else if (*samp) {
            text = sample_output(o);
        } else if (*l31) {
            text = levelset_output(small_logderiv_measure(input_polynomial(o), o.delta, input_interval(o)), o);
        } else if (*l32) {
            text = levelset_output(large_logderiv_measure(input_polynomial(o), o.alpha, input_interval(o)), o);
        } else if (*decay) {
            text = decay_output(o);
        } else if (*search) {
            text = search_output(o);
        } else if (*sweep) {
            if (o.format.empty()) o.format = "csv";
            text = sweep_output(o);
        } else if (*construct) {
            text = construct_output(o);
        } else if (*remark) {
            text = remark_output(o);
        }
        if (o.out.empty()) {
            out << text;
        } else {
            std::ofstream f(o.out);
            if (!f) throw InvalidArgument("cannot write output file: " + o.out);
            f << text;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace turan::cli

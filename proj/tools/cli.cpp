#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "omcube/budget.hpp"
#include "omcube/complete.hpp"
#include "omcube/comstruct.hpp"
#include "omcube/corpus.hpp"
#include "omcube/error.hpp"
#include "omcube/family.hpp"
#include "omcube/io.hpp"
#include "omcube/parallel.hpp"
#include "omcube/pcube.hpp"
#include "omcube/signvec.hpp"

namespace omcube::cli {

namespace {

using io::Json;

struct Options {
    std::string format = "json";
    unsigned threads = 1;
    double budget = 0;
    bool timings = false;

    std::string input;
    std::string second_input;
    std::string mode;
    std::string strategy = "search";
    std::string arrangement;
    std::string trace_out;
    std::string stage = "amp";
    std::string name;
    std::string jsonl;
    bool diagnostics = false;
    bool classify = false;
    bool counterexamples = false;
    int dcap = 3;
    int d = 3;
    int m = 0;
    int r = 0;
    int pencil = 0;
    std::uint64_t seed = 1;
};

// Carries a partial result out of a command that ran out of budget.
struct Partial : Error {
    Partial(const Error& e, Json progress) : Error(e), progress(std::move(progress)) {}
    Json progress;
};

int exit_code_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::resource: return exit_resource;
        case ErrorCode::no_completion:
        case ErrorCode::not_cuom: return exit_verdict;
        case ErrorCode::internal: return exit_internal;
        default: return exit_precondition;
    }
}

class Session {
public:
    Session(const Options& opts, std::istream& in)
        : in_(in), deadline_(opts.budget > 0 ? Deadline::after_seconds(opts.budget) : Deadline{}) {}

    std::string digest_input() const { return io::digest(bytes_); }

    // Path, "-" for stdin, or "named:<NAME>" for a catalog family.
    Family family(const std::string& source) {
        if (source.rfind("named:", 0) == 0) {
            bytes_ += source;
            return named(source.substr(6));
        }
        return io::parse_family(text(source));
    }

    std::string text(const std::string& source) {
        std::string t;
        if (source == "-") {
            std::ostringstream ss;
            ss << in_.rdbuf();
            t = ss.str();
        } else {
            t = io::read_text(source);
        }
        bytes_ += t;
        return t;
    }

    void note(const std::string& s) { bytes_ += s; }

    // The budget runs from session start, not from each search.
    Deadline deadline() const { return deadline_; }

private:
    std::istream& in_;
    std::string bytes_;
    Deadline deadline_;
};

Json vcdim_result(const Family& f) {
    const auto rep = sandwich_report(f);
    Json j;
    j["vcd"] = rep.vcd;
    j["size"] = rep.size;
    j["strongly_shattered"] = rep.strongly_shattered;
    j["shattered"] = rep.shattered;
    j["sauer_bound"] = rep.sauer_bound;
    Json ample;
    for (auto method : {AmpleMethod::complexes, AmpleMethod::counting, AmpleMethod::lawrence, AmpleMethod::gallery}) {
        if (method == AmpleMethod::gallery && !is_partial_cube(f)) {
            ample[ample_method_name(method)] = nullptr;
            continue;
        }
        try {
            ample[ample_method_name(method)] = is_ample(f, method);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::method_unavailable && e.code() != ErrorCode::resource) throw;
            ample[ample_method_name(method)] = nullptr;
        }
    }
    j["ample"] = std::move(ample);
    return j;
}

Json faces_result(const Family& f) {
    FaceLattice lat(f);
    Json faces = Json::array();
    for (std::size_t i = 0; i < lat.faces().size(); ++i) {
        Json face = io::face_to_json(lat.faces()[i]);
        face["maximal"] = lat.is_maximal(i);
        faces.push_back(std::move(face));
    }
    Json j;
    j["count"] = lat.faces().size();
    j["all_gated"] = lat.all_gated();
    j["faces"] = std::move(faces);
    return j;
}

Json complete_result(Session& session, const Options& opts, const Family& f) {
    Json j;
    if (opts.mode == "uom") {
        const auto trace = uom_to_amp(f);
        if (!opts.trace_out.empty()) io::save_trace(opts.trace_out, trace);
        j = io::trace_to_json(trace);
        j["vcd"] = vc_dim(trace.result);
        return j;
    }
    if (opts.mode == "om") {
        OmToUomOptions o;
        o.deadline = session.deadline();
        o.seed = opts.seed;
        std::optional<Arrangement> arr;
        if (opts.strategy == "realization") {
            if (opts.arrangement.empty()) fail(ErrorCode::argument, "--strategy realization needs --arrangement");
            arr = io::parse_arrangement(session.text(opts.arrangement));
            o.strategy = UomStrategy::realization;
            o.realization = &*arr;
        } else if (opts.strategy != "search") {
            fail(ErrorCode::argument, "--strategy must be search or realization");
        }
        const Family uom = om_to_uom(f, o);
        j["result"] = io::family_to_json(uom);
        j["topes"] = uom.size();
        j["rank"] = classify(uom).rank;
        return j;
    }
    if (opts.mode == "cuom") {
        CuomOptions o;
        o.diagnostics = opts.diagnostics;
        const auto res = cuom_to_amp(f, o);
        if (!opts.trace_out.empty()) io::save_trace(opts.trace_out, res.trace);
        j = io::trace_to_json(res.trace);
        j["vcd"] = vc_dim(res.trace.result);
        if (res.diagnostics) {
            const auto& d = *res.diagnostics;
            Json dj;
            dj["reversed_order_ample"] = d.reversed_order_ample;
            dj["reversed_order_same_vcd"] = d.reversed_order_same_vcd;
            dj["reversed_order_same_set"] = d.reversed_order_same_set;
            dj["parallel_pairs"] = d.parallel_pairs;
            dj["parallel_pairs_consistent"] = d.parallel_pairs_consistent;
            dj["amalgam_premises"] = d.amalgam_premises;
            dj["amalgam_violations"] = d.amalgam_violations;
            j["diagnostics"] = std::move(dj);
        }
        return j;
    }
    fail(ErrorCode::argument, "--mode must be uom, om or cuom");
}

Json oracle_result(Session& session, const Options& opts, const Family& f) {
    const auto found = min_ample_completion(f, opts.dcap, session.deadline());
    if (!found) fail(ErrorCode::no_completion, "no ample completion with vcd <= " + std::to_string(opts.dcap));
    Json j;
    j["vcd"] = vc_dim(f);
    j["d_min"] = found->d_min;
    j["witness"] = io::family_to_json(found->witness);
    return j;
}

Json naive_result(const Options& opts, const Family& f) {
    NaiveStage stage;
    if (opts.stage == "amp") stage = NaiveStage::amp;
    else if (opts.stage == "uom") stage = NaiveStage::uom;
    else fail(ErrorCode::argument, "--stage must be uom or amp");
    const auto u = naive_facet_union(f, stage);
    Json j;
    j["partial_cube"] = u.partial_cube;
    j["induced_partial_cube"] = u.induced_partial_cube;
    j["pieces"] = u.pieces.size();
    j["result"] = io::family_to_json(u.result);
    j["ample"] = is_ample(u.result);
    return j;
}

Json class_counts(const std::vector<EnumeratedClass>& classes, unsigned threads) {
    std::vector<ClassReport> reports(classes.size());
    parallel_for(classes.size(), threads, [&](std::size_t i) { reports[i] = classify(classes[i].family); });
    std::map<std::string, std::size_t> counts;
    for (const char* k : {"COM", "OM", "UOM", "CUOM", "AMP"}) counts[k] = 0;
    for (const auto& r : reports) {
        counts["COM"] += r.com;
        counts["OM"] += r.om;
        counts["UOM"] += r.uom;
        counts["CUOM"] += r.cuom;
        counts["AMP"] += r.amp;
    }
    Json j;
    for (const char* k : {"COM", "OM", "UOM", "CUOM", "AMP"}) j[k] = counts[k];
    return j;
}

Json counterexamples(Session& session, const Options& opts, const std::vector<EnumeratedClass>& classes) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (vc_dim(classes[i].family) == opts.d) candidates.push_back(i);

    // -1: not yet decided, 0: completes at d, otherwise d_min.
    std::vector<int> verdict(candidates.size(), -1);
    const Deadline deadline = session.deadline();
    try {
        parallel_for(candidates.size(), opts.threads, [&](std::size_t c) {
            const Deadline local = deadline;
            const Family& f = classes[candidates[c]].family;
            if (ample_completion_at_most(f, opts.d, local)) {
                verdict[c] = 0;
                return;
            }
            const auto found = min_ample_completion(f, f.m(), local);
            verdict[c] = found ? found->d_min : f.m() + 1;
        });
    } catch (const Error& e) {
        if (e.code() != ErrorCode::resource) throw;
        Json progress;
        progress["candidates"] = candidates.size();
        progress["decided"] = std::count_if(verdict.begin(), verdict.end(), [](int v) { return v >= 0; });
        throw Partial(e, progress);
    }

    std::vector<std::size_t> failing;
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (verdict[c] > 0) failing.push_back(c);

    Json list = Json::array();
    for (std::size_t c : failing) {
        const auto& cls = classes[candidates[c]];
        Json item;
        item["key"] = cls.key.to_string();
        item["vertices"] = cls.family.size();
        item["d_min"] = verdict[c];
        item["family"] = io::family_to_json(cls.family);
        std::size_t hosts = 0;
        for (std::size_t o : failing)
            if (o != c && embeds_up_to_symmetry(cls.family, classes[candidates[o]].family)) ++hosts;
        item["embeds_in_others"] = hosts;
        list.push_back(std::move(item));
    }
    // Graph-isomorphism classes among the failures.
    std::vector<std::size_t> reps;
    for (std::size_t c : failing) {
        const Family& f = classes[candidates[c]].family;
        bool seen = false;
        for (std::size_t r : reps) seen = seen || graphs_isomorphic(f, classes[candidates[r]].family);
        if (!seen) reps.push_back(c);
    }
    Json j;
    j["d"] = opts.d;
    j["candidates"] = candidates.size();
    j["classes"] = failing.size();
    j["graph_isomorphism_classes"] = reps.size();
    j["failures"] = std::move(list);
    return j;
}

Json enumerate_result(Session& session, const Options& opts) {
    session.note("enumerate " + std::to_string(opts.m));
    const auto classes = enumerate_partial_cubes(opts.m, opts.threads);
    if (!opts.jsonl.empty()) {
        std::ofstream out(opts.jsonl);
        if (!out) fail(ErrorCode::argument, "cannot write " + opts.jsonl);
        for (const auto& c : classes) {
            Json line = io::family_to_json(c.family);
            line["key"] = c.key.to_string();
            out << line.dump() << "\n";
        }
    }
    Json j;
    j["m"] = opts.m;
    j["classes"] = classes.size();
    std::map<int, std::size_t> by_vcd;
    for (const auto& c : classes) ++by_vcd[vc_dim(c.family)];
    Json bv;
    for (const auto& [d, n] : by_vcd) bv[std::to_string(d)] = n;
    j["by_vcd"] = std::move(bv);
    if (opts.classify) j["classification"] = class_counts(classes, opts.threads);
    if (opts.counterexamples) j["counterexamples"] = counterexamples(session, opts, classes);
    return j;
}

Json gen_result(Session& session, const Options& opts, const std::string& kind) {
    Json j;
    if (kind == "uniform-om") {
        session.note("uniform-om " + std::to_string(opts.m) + " " + std::to_string(opts.r) + " " + std::to_string(opts.seed));
        const auto real = gen_uniform_om(opts.m, opts.r, opts.seed);
        j["family"] = io::family_to_json(real.topes);
        j["arrangement"] = io::arrangement_to_json(real.arrangement);
        j["covectors"] = real.covectors.size();
    } else if (kind == "pencil-cuom") {
        session.note("pencil-cuom " + std::to_string(opts.m) + " " + std::to_string(opts.r) + " " + std::to_string(opts.pencil) +
                     " " + std::to_string(opts.seed));
        const auto real = gen_pencil_cuom(opts.m, opts.r, opts.pencil, opts.seed);
        j["family"] = io::family_to_json(real.topes);
        j["arrangement"] = io::arrangement_to_json(real.arrangement);
    } else if (kind == "com") {
        const auto arr = io::parse_arrangement(session.text(opts.input));
        j["family"] = io::family_to_json(gen_realizable_com(arr));
    } else if (kind == "product") {
        j["family"] = io::family_to_json(product(session.family(opts.input), session.family(opts.second_input)));
    } else if (kind == "named") {
        session.note("named " + opts.name);
        j["family"] = io::family_to_json(named(opts.name));
    }
    return j;
}

Json simplify_result(Session& session, const Options& opts) {
    const auto sys = io::parse_signsystem(session.text(opts.input));
    const auto simp = simplify(sys);
    const auto rep = axiom_report(simp.system);
    Json j;
    Json deleted = Json::array();
    for_each_bit(simp.deleted, [&](int e) { deleted.push_back(e + 1); });
    j["deleted"] = std::move(deleted);
    Json covs = Json::array();
    for (const auto& x : simp.system.covectors()) covs.push_back(x.to_string());
    j["covectors"] = std::move(covs);
    j["COM"] = rep.is_com();
    j["OM"] = rep.is_om();
    j["AMP"] = rep.is_amp();
    return j;
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opts;
    if (const char* env = std::getenv("OMCUBE_THREADS")) {
        try {
            opts.threads = static_cast<unsigned>(std::max(1, std::stoi(env)));
        } catch (const std::exception&) {
            err << "ignoring malformed OMCUBE_THREADS\n";
        }
    }

    CLI::App app{"Ample completions of partial cubes, COMs and oriented matroids", "omcube"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", opts.threads, "Worker threads (default: OMCUBE_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--budget", opts.budget, "Wall-clock budget in seconds for long searches")->check(CLI::NonNegativeNumber);
    app.add_flag("--timings", opts.timings, "Add elapsed time to the report");

    auto* classify_cmd = app.add_subcommand("classify", "Classify a tope family");
    classify_cmd->add_option("family", opts.input)->required();
    auto* vcdim_cmd = app.add_subcommand("vcdim", "VC-dimension, shattering counts and ampleness");
    vcdim_cmd->add_option("family", opts.input)->required();
    auto* faces_cmd = app.add_subcommand("faces", "List the faces of a partial cube");
    faces_cmd->add_option("family", opts.input)->required();
    auto* complete_cmd = app.add_subcommand("complete", "Run a completion algorithm");
    complete_cmd->add_option("--mode", opts.mode)->required()->check(CLI::IsMember({"uom", "om", "cuom"}));
    complete_cmd->add_option("--strategy", opts.strategy, "OM to UOM: search or realization");
    complete_cmd->add_option("--arrangement", opts.arrangement, "Arrangement JSON for --strategy realization");
    complete_cmd->add_option("--trace-out", opts.trace_out, "Also write the trace JSON here");
    complete_cmd->add_flag("--diagnostics", opts.diagnostics, "CUOM: order, parallel-face and amalgam diagnostics");
    complete_cmd->add_option("--seed", opts.seed);
    complete_cmd->add_option("family", opts.input)->required();
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum ample completion (m <= 6)");
    oracle_cmd->add_option("--dcap", opts.dcap)->required();
    oracle_cmd->add_option("family", opts.input)->required();
    auto* naive_cmd = app.add_subcommand("naive-union", "Complete maximal faces independently and unite");
    naive_cmd->add_option("--stage", opts.stage, "uom or amp");
    naive_cmd->add_option("family", opts.input)->required();
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Partial cubes in Q_m up to signed permutations");
    enumerate_cmd->add_option("--m", opts.m)->required()->check(CLI::Range(0, 5));
    enumerate_cmd->add_flag("--classify", opts.classify);
    auto* find_opt = enumerate_cmd->add_flag("--find-counterexamples", opts.counterexamples);
    enumerate_cmd->add_option("--d", opts.d)->needs(find_opt);
    enumerate_cmd->add_option("--jsonl", opts.jsonl, "Write one canonical family per line");
    auto* gen_cmd = app.add_subcommand("gen", "Generate families");
    gen_cmd->require_subcommand(1);
    gen_cmd->fallthrough();
    auto* gen_uom = gen_cmd->add_subcommand("uniform-om");
    gen_uom->add_option("--m", opts.m)->required();
    gen_uom->add_option("--r", opts.r)->required();
    gen_uom->add_option("--seed", opts.seed);
    auto* gen_pencil = gen_cmd->add_subcommand("pencil-cuom");
    gen_pencil->add_option("--m", opts.m)->required();
    gen_pencil->add_option("--r", opts.r)->required();
    gen_pencil->add_option("--pencil", opts.pencil)->required();
    gen_pencil->add_option("--seed", opts.seed);
    auto* gen_com = gen_cmd->add_subcommand("com");
    gen_com->add_option("arrangement", opts.input)->required();
    auto* gen_product = gen_cmd->add_subcommand("product");
    gen_product->add_option("first", opts.input)->required();
    gen_product->add_option("second", opts.second_input)->required();
    auto* gen_named = gen_cmd->add_subcommand("named");
    gen_named->add_option("name", opts.name)->required();
    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of the induced subgraph");
    dot_cmd->add_option("family", opts.input)->required();
    auto* simplify_cmd = app.add_subcommand("simplify", "Delete redundant elements of a sign system");
    simplify_cmd->add_option("system", opts.input)->required();

    std::vector<std::string> argv_store{"omcube"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_precondition;
    }

    CLI::App* cmd = app.get_subcommands().front();
    std::string command = cmd->get_name();
    if (command == "gen") command += " " + cmd->get_subcommands().front()->get_name();

    Session session(opts, in);
    Json report;
    report["command"] = command;
    report["args"] = args;
    const auto start = std::chrono::steady_clock::now();
    int code = exit_ok;
    Json result;
    try {
        if (command == "export-dot") {
            out << io::export_dot(session.family(opts.input));
            return exit_ok;
        }
        if (command == "classify") result = io::report_to_json(classify(session.family(opts.input)));
        else if (command == "vcdim") result = vcdim_result(session.family(opts.input));
        else if (command == "faces") result = faces_result(session.family(opts.input));
        else if (command == "complete") {
            const Family f = session.family(opts.input);
            result = complete_result(session, opts, f);
        } else if (command == "oracle") result = oracle_result(session, opts, session.family(opts.input));
        else if (command == "naive-union") result = naive_result(opts, session.family(opts.input));
        else if (command == "enumerate") result = enumerate_result(session, opts);
        else if (command.rfind("gen ", 0) == 0) result = gen_result(session, opts, command.substr(4));
        else if (command == "simplify") result = simplify_result(session, opts);
        report["input_digest"] = session.digest_input();
        report["status"] = "ok";
        report["result"] = std::move(result);
    } catch (const Error& e) {
        code = exit_code_of(e.code());
        report["input_digest"] = session.digest_input();
        report["status"] = "error";
        Json ej;
        ej["code"] = error_code_name(e.code());
        ej["message"] = e.what();
        if (const auto* p = dynamic_cast<const Partial*>(&e)) ej["progress"] = p->progress;
        report["error"] = std::move(ej);
        err << "omcube " << command << ": " << e.what() << "\n";
    }
    if (opts.timings)
        report["timings"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};

    if (opts.format == "text") render_text(report, "", out);
    else out << report.dump(2) << "\n";
    return code;
}

}  // namespace omcube::cli

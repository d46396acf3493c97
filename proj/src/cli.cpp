#include "dbialg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "dbialg/axioms.hpp"
#include "dbialg/engine.hpp"
#include "dbialg/graph.hpp"
#include "dbialg/kx.hpp"
#include "dbialg/morphisms.hpp"
#include "dbialg/oracles.hpp"
#include "dbialg/orientations.hpp"
#include "dbialg/render.hpp"
#include "dbialg/word.hpp"

namespace dbialg::cli {

namespace {

constexpr int kGraphGuard = 9;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string carrier = "graph";
    std::string format = "text";
    int max_grade = 6;
    bool allow_large = false;
    bool verify = false;
    std::string input;
    std::string which;
};

enum class Kind { graph, words, kx };

struct CarrierSpec {
    Kind kind = Kind::graph;
    Semigroup sg;
};

CarrierSpec parse_carrier(const std::string& s) {
    if (s == "graph") return {Kind::graph, Semigroup::qsym()};
    if (s == "qsym") return {Kind::words, Semigroup::qsym()};
    if (s == "kx") return {Kind::kx, Semigroup::qsym()};
    const std::string prefix = "semigroup:";
    if (s.rfind(prefix, 0) == 0) {
        const std::string n = s.substr(prefix.size());
        if (n.empty() || !std::all_of(n.begin(), n.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
            n.size() > 6)
            throw UsageError("bad semigroup cap: " + s);
        const int cap = std::stoi(n);
        if (cap < 1) throw UsageError("semigroup cap must be at least 1");
        return {Kind::words, Semigroup::capped(cap)};
    }
    throw UsageError("unknown carrier '" + s + "' (graph, qsym, semigroup:<cap>, kx)");
}

// Collects the primary result and any verification checks, then prints both.
class Report {
  public:
    Report(const Options& o, std::string command) : o_(o) {
        json_["schema"] = 1;
        json_["command"] = std::move(command);
        json_["carrier"] = o.carrier;
        if (!o.input.empty()) json_["input"] = o.input;
    }

    void result(const std::string& text, Json json) {
        text_ += text + "\n";
        json_["result"] = std::move(json);
    }
    void line(const std::string& text) { text_ += text + "\n"; }
    void field(const std::string& key, Json v) { json_[key] = std::move(v); }

    void check(const std::string& name, bool ok) {
        checks_.emplace_back(name, ok);
        failed_ = failed_ || !ok;
    }

    int emit(std::ostream& out) const {
        if (o_.format == "json") {
            Json j = json_;
            if (!checks_.empty()) {
                Json v = Json::object();
                for (const auto& [name, ok] : checks_) v[name] = ok;
                j["verify"] = v;
            }
            out << j.dump(2) << "\n";
        } else {
            out << text_;
            for (const auto& [name, ok] : checks_) out << "verify " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
        }
        return failed_ ? kVerifyFailed : kOk;
    }

  private:
    const Options& o_;
    Json json_;
    std::string text_;
    std::vector<std::pair<std::string, bool>> checks_;
    bool failed_ = false;
};

void guard(const Options& o, Kind kind) {
    if (o.max_grade < 0) throw UsageError("--max-grade must be nonnegative");
    if (kind == Kind::graph && o.max_grade > kGraphGuard && !o.allow_large)
        throw GuardError("--max-grade " + std::to_string(o.max_grade) + " exceeds the graph guard of " +
                         std::to_string(kGraphGuard) + "; pass --allow-large (slow)");
}

void check_input_grade(int grade, const Options& o) {
    if (grade > o.max_grade) throw GradeOverflow(grade, o.max_grade);
}

Graph graph_input(const Options& o, const CarrierSpec& cs) {
    if (cs.kind != Kind::graph) throw UsageError("this command needs --carrier graph");
    Graph g = Graph::parse(o.input);
    check_input_grade(g.vertex_count(), o);
    return g;
}

Word word_input(const Options& o, const CarrierSpec& cs) {
    Word w = parse_word(o.input, cs.sg);
    check_input_grade(static_cast<int>(w.size()), o);
    return w;
}

WordCarrier word_carrier(const CarrierSpec& cs) {
    return cs.sg.bounded() ? WordCarrier(cs.sg) : WordCarrier(cs.sg, 3);
}

// ---- commands ---------------------------------------------------------------

int cmd_chromatic(const Options& o, std::ostream& out) {
    const CarrierSpec cs = parse_carrier(o.carrier);
    guard(o, cs.kind);
    const Graph g = graph_input(o, cs);
    GraphCarrier c;
    Engine<GraphCarrier> e(c, o.max_grade);
    const Poly p = unique_Phi(e)(g);
    Report r(o, "chromatic");
    r.result(p.str(), to_json(p));
    if (o.verify) {
        r.check("deletion-contraction", chromatic_dc(g) == p);
        r.check("packed-valid-colorations", oracle::packed_valid_expansion(g) == p);
    }
    return r.emit(out);
}

template <class C>
int coproduct_for(const Options& o, const C& c, const typename C::Basis& b, std::ostream& out) {
    const bool big = o.which == "Delta";
    const auto& t = big ? c.coproduct(b) : c.internal_coproduct(b);
    Report r(o, "coproduct");
    r.field("coproduct", o.which);
    r.result(to_text(t), to_json(t));
    return r.emit(out);
}

int cmd_coproduct(const Options& o, std::ostream& out) {
    if (o.which != "Delta" && o.which != "delta") throw UsageError("coproduct must be Delta or delta");
    const CarrierSpec cs = parse_carrier(o.carrier);
    guard(o, cs.kind);
    if (cs.kind == Kind::graph) return coproduct_for(o, GraphCarrier{}, graph_input(o, cs), out);
    if (cs.kind == Kind::words) return coproduct_for(o, word_carrier(cs), word_input(o, cs), out);
    throw UsageError("coproduct supports graph and word carriers");
}

template <class C, class Extra>
int antipode_for(const Options& o, const C& c, const typename C::Basis& b, std::ostream& out, Extra closed_form) {
    Engine<C> e(c, o.max_grade);
    const auto s = e.antipode_takeuchi()(b);
    Report r(o, "antipode");
    r.result(to_text(s), to_json(s));
    if (o.verify) {
        r.check("theta-of-inverse-counit", e.antipode_via_delta()(b) == s);
        closed_form(r, s);
    }
    return r.emit(out);
}

int cmd_antipode(const Options& o, std::ostream& out) {
    const CarrierSpec cs = parse_carrier(o.carrier);
    guard(o, cs.kind);
    if (cs.kind == Kind::graph) {
        const GraphCarrier c;
        return antipode_for(o, c, graph_input(o, cs), out, [](Report&, const GraphElem&) {});
    }
    if (cs.kind == Kind::words) {
        const WordCarrier c = word_carrier(cs);
        const Word w = word_input(o, cs);
        return antipode_for(o, c, w, out, [&](Report& r, const WordElem& s) {
            r.check("descent-closed-form", antipode_word(w, cs.sg) == s);
        });
    }
    throw UsageError("antipode supports graph and word carriers");
}

template <class C>
int eulerian_for(const Options& o, const C& c, const typename C::Basis& b, std::ostream& out) {
    Engine<C> e(c, o.max_grade);
    const auto x = e.eulerian()(b);
    Report r(o, "eulerian");
    r.result(to_text(x), to_json(x));
    return r.emit(out);
}

int cmd_eulerian(const Options& o, std::ostream& out) {
    const CarrierSpec cs = parse_carrier(o.carrier);
    guard(o, cs.kind);
    if (cs.kind == Kind::graph) return eulerian_for(o, GraphCarrier{}, graph_input(o, cs), out);
    if (cs.kind == Kind::words) return eulerian_for(o, word_carrier(cs), word_input(o, cs), out);
    throw UsageError("eulerian supports graph and word carriers");
}

int cmd_phi(const Options& o, std::ostream& out) {
    const CarrierSpec cs = parse_carrier(o.carrier);
    guard(o, cs.kind);
    const Graph g = graph_input(o, cs);
    GraphCarrier c;
    Engine<GraphCarrier> e(c, o.max_grade);
    const Scalar v = phi_inf(e)(g);
    Report r(o, "phi");
    r.result(v.str(), to_json(v));
    if (o.verify) {
        r.check("log-of-counit", e.phi()(g) == v);
        r.check("greene-zaslavsky", gz_verify(g, v).ok);
    }
    return r.emit(out);
}

int cmd_orientations(const Options& o, std::ostream& out) {
    const CarrierSpec cs = parse_carrier(o.carrier);
    guard(o, cs.kind);
    const Graph g = graph_input(o, cs);
    const GZReport gz = gz_verify(g);
    Report r(o, "orientations");
    std::ostringstream s;
    s << "phi_chr = " << gz.phi_chr.str() << ", phi_tilde = " << gz.phi_tilde << ", sign = " << gz.sign
      << ", ok = " << (gz.ok ? "true" : "false");
    r.result(s.str(), to_json(gz));
    r.check("greene-zaslavsky", gz.ok);
    return r.emit(out);
}

int cmd_qsym(const Options& o, std::ostream& out) {
    const CarrierSpec cs = parse_carrier(o.carrier);
    guard(o, cs.kind);
    const Graph g = graph_input(o, cs);
    GraphCarrier c;
    Engine<GraphCarrier> e(c, o.max_grade);
    const WordElem x = abs_qsym(e, e.counit_delta())(g);
    Report r(o, "qsym-morphism");
    r.result(to_text(x), to_json(x));
    if (o.verify) r.check("chromatic-image", qsym_to_poly(x) == unique_Phi(e)(g));
    return r.emit(out);
}

template <class C>
int axioms_for(const Options& o, const C& c, std::ostream& out) {
    Report r(o, "axioms");
    r.field("max_grade", o.max_grade);
    Json results = Json::array();
    bool all = true;
    for (const AxiomResult& a : check_axioms(c, o.max_grade)) {
        all = all && a.passed;
        r.line(std::string(a.passed ? "PASS " : "FAIL ") + a.name + " (" + std::to_string(a.checked) + " checks)" +
               (a.passed ? "" : ": " + a.counterexample));
        Json j = {{"name", a.name}, {"passed", a.passed}, {"checked", a.checked}};
        if (!a.passed) j["counterexample"] = a.counterexample;
        results.push_back(j);
    }
    r.field("result", results);
    r.check("all-axioms", all);
    return r.emit(out);
}

int cmd_axioms(const Options& o, std::ostream& out) {
    const CarrierSpec cs = parse_carrier(o.carrier);
    guard(o, cs.kind);
    if (cs.kind == Kind::graph) return axioms_for(o, GraphCarrier{}, out);
    if (cs.kind == Kind::kx) return axioms_for(o, KXCarrier{}, out);
    return axioms_for(o, word_carrier(cs), out);
}

int cmd_hypothesis3(const Options& o, std::ostream& out) {
    const Hypothesis3Report h = hypothesis3_witness();
    Report r(o, "hypothesis3");
    r.line("Phi(K2) = " + to_text(h.phi_k2));
    r.line("delta(Phi(K2)) = " + to_text(h.delta_of_phi));
    r.line("(Phi⊗Phi)(delta(K2)) = " + to_text(h.phi_of_delta));
    r.line("difference = " + to_text(h.difference));
    r.line(std::string("intertwines delta: ") + (h.differs() ? "no" : "yes"));
    r.field("result", {{"phi_k2", to_json(h.phi_k2)},
                       {"delta_of_phi", to_json(h.delta_of_phi)},
                       {"phi_of_delta", to_json(h.phi_of_delta)},
                       {"difference", to_json(h.difference)},
                       {"intertwines", !h.differs()}});
    return r.emit(out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Double bialgebra computations on graphs and quasishuffle words"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--carrier", o.carrier, "graph | qsym | semigroup:<cap>")->capture_default_str();
    app.add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--max-grade", o.max_grade, "grade cap for all computations")->capture_default_str();
    app.add_flag("--allow-large", o.allow_large, "lift the graph guard (slow)");

    std::function<int()> action;
    auto with_input = [&](const char* name, const char* help, std::function<int()> f, bool verify) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", o.input, "graph \"n; u-v,...\" or word \"(a,b,...)\"")->required();
        if (verify) sub->add_flag("--verify", o.verify, "append cross-checks");
        sub->callback([&action, f] { action = f; });
        return sub;
    };
    with_input("chromatic", "chromatic polynomial", [&] { return cmd_chromatic(o, out); }, true);
    with_input("antipode", "antipode", [&] { return cmd_antipode(o, out); }, true);
    with_input("eulerian", "eulerian idempotent", [&] { return cmd_eulerian(o, out); }, false);
    with_input("phi", "infinitesimal character", [&] { return cmd_phi(o, out); }, true);
    with_input("orientations", "Greene-Zaslavsky report", [&] { return cmd_orientations(o, out); }, false);
    with_input("qsym-morphism", "image in QSym", [&] { return cmd_qsym(o, out); }, true);

    CLI::App* co = app.add_subcommand("coproduct", "Delta or delta of a basis element");
    co->add_option("which", o.which, "Delta | delta")->required();
    co->add_option("input", o.input, "graph or word")->required();
    co->callback([&] { action = [&] { return cmd_coproduct(o, out); }; });

    CLI::App* ax = app.add_subcommand("axioms", "check the double bialgebra axioms");
    ax->add_option("carrier", o.carrier, "graph | qsym | semigroup:<cap> | kx")->required();
    ax->callback([&] { action = [&] { return cmd_axioms(o, out); }; });

    CLI::App* h3 = app.add_subcommand("hypothesis3", "QSym internal coproduct counterexample on K2");
    h3->callback([&] { action = [&] { return cmd_hypothesis3(o, out); }; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const GradeOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace dbialg::cli

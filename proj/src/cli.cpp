#include "rat/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rat/closed_forms.hpp"
#include "rat/markov.hpp"
#include "rat/render.hpp"
#include "rat/suites.hpp"
#include "rat/tableau.hpp"

namespace rat::cli {

namespace {

using nlohmann::ordered_json;

class RequestError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string str(std::size_t v) { return std::to_string(v); }

std::string tile_text(const Tile& t) {
    return std::string(tile_kind_name(t.kind)) + "@(" + std::to_string(t.anchor.x) + "," +
           std::to_string(t.anchor.y) + ")";
}

std::string marks_text(std::span<const Mark> marks) {
    std::string out;
    for (Mark m : marks) out += mark_char(m);
    return out;
}

class Context {
public:
    Context(const CommandRequest& req, std::ostream& out) : req_(req), out_(out) {
        limits_ = Limits::from_environment();
        if (req.max_area) limits_.max_area = *req.max_area;
        bounded_ = !req.max_area.has_value();
        report_["schema_version"] = kSchemaVersion;
        report_["command"] = req.subcommand;
        report_["inputs"] = ordered_json::object();
        report_["results"] = ordered_json::object();
    }

    int dispatch() {
        const std::string& cmd = req_.subcommand;
        int code = 0;
        if (cmd == "weight") code = weight();
        else if (cmd == "fillings") code = fillings();
        else if (cmd == "tilings") code = tilings();
        else if (cmd == "stationary") code = stationary();
        else if (cmd == "verify") code = verify();
        else if (cmd == "count") code = count();
        else if (cmd == "render") code = render();
        else throw RequestError("unknown subcommand '" + cmd + "'");
        if (req_.output == OutputFormat::Json) out_ << report_.dump(2) << '\n';
        else out_ << text_.str();
        return code;
    }

private:
    ordered_json& inputs() { return report_["inputs"]; }
    ordered_json& results() { return report_["results"]; }

    Word word() {
        if (!req_.word) throw RequestError(req_.subcommand + " needs a word");
        Word w = Word::parse(*req_.word);
        if (bounded_ && w.size() > kDefaultMaxWordLength)
            throw RequestError("word length " + str(w.size()) + " exceeds " + str(kDefaultMaxWordLength) +
                               "; pass --max-area to raise the limit");
        check_limit("diagram area", diagram_area(w), limits_.max_area);
        inputs()["word"] = w.to_string();
        return w;
    }

    std::pair<std::size_t, std::size_t> sector() {
        if (!req_.n || !req_.r) throw RequestError(req_.subcommand + " needs n and r");
        const std::size_t n = *req_.n, r = *req_.r;
        if (r > n) throw RequestError("r must not exceed n");
        check_sector_size(n);
        inputs()["n"] = str(n);
        inputs()["r"] = str(r);
        return {n, r};
    }

    void check_sector_size(std::size_t n) const {
        if (bounded_ && n > kDefaultMaxSectorN)
            throw RequestError("n = " + str(n) + " exceeds " + str(kDefaultMaxSectorN) +
                               "; pass --max-area to raise the limit");
    }

    Tiling chosen_tiling(const Word& w) {
        DiagramPtr d = make_diagram(w);
        const bool maximal = req_.tiling == TilingChoice::Maximal;
        inputs()["tiling"] = maximal ? "maximal" : "minimal";
        return maximal ? maximal_tiling(d) : minimal_tiling(d);
    }

    int weight() {
        const Word w = word();
        const Tiling t = chosen_tiling(w);
        const TableauFrame frame(t);
        Polynomial total;
        std::size_t count = 0;
        for_each_filling(frame, [&](std::span<const Mark> marks) {
            total += weight_of_marks(frame, marks).to_polynomial();
            check_limit("filling count", ++count, limits_.max_fillings);
        });
        const Polynomial reduced = strip_boundary_factor(total, w);
        results()["weight"] = total.to_string();
        results()["boundary_factor"] = boundary_factor(w).to_string();
        results()["reduced_weight"] = reduced.to_string();
        results()["fillings"] = str(count);
        text_ << "weight: " << total.to_string() << '\n'
              << "boundary factor: " << boundary_factor(w).to_string() << '\n'
              << "reduced: " << reduced.to_string() << '\n'
              << "fillings: " << count << '\n';
        return 0;
    }

    int fillings() {
        const Word w = word();
        const Tiling t = chosen_tiling(w);
        ordered_json tiles = ordered_json::array();
        text_ << "tiles:";
        for (const Tile& tile : t.tiles()) {
            tiles.push_back(tile_text(tile));
            text_ << ' ' << tile_text(tile);
        }
        text_ << '\n';
        ordered_json list = ordered_json::array();
        std::vector<Filling> all = enumerate_fillings(t, limits_);
        for (std::size_t i = 0; i < all.size(); ++i) {
            const std::string marks = marks_text(all[i].marks());
            const std::string wt = weight_of_filling(all[i]).to_polynomial().to_string();
            list.push_back({{"index", str(i)}, {"marks", marks}, {"weight", wt}});
            text_ << i << ' ' << marks << ' ' << wt << '\n';
        }
        results()["tiles"] = std::move(tiles);
        results()["count"] = str(all.size());
        results()["fillings"] = std::move(list);
        text_ << "count: " << all.size() << '\n';
        return 0;
    }

    int tilings() {
        const Word w = word();
        FlipGraph g = enumerate_tilings(make_diagram(w), limits_);
        ordered_json list = ordered_json::array();
        text_ << "count: " << g.tilings.size() << '\n';
        for (std::size_t i = 0; i < g.tilings.size(); ++i) {
            const Tiling& t = g.tilings[i];
            const std::string key = tiling_to_paths(t).key();
            ordered_json tiles = ordered_json::array();
            for (const Tile& tile : t.tiles()) tiles.push_back(tile_text(tile));
            list.push_back({{"index", str(i)},
                            {"height", str(height(t))},
                            {"flip_distance", str(g.distance[i])},
                            {"paths", key},
                            {"tiles", std::move(tiles)}});
            text_ << i << " height=" << height(t) << " flips=" << g.distance[i] << " paths=" << key << '\n';
        }
        results()["count"] = str(g.tilings.size());
        results()["tilings"] = std::move(list);
        return 0;
    }

    Rational rational_arg(const std::optional<std::string>& text, const char* name) {
        if (!text) throw RequestError(std::string("stationary needs ") + name);
        Rational v = parse_rational(*text);
        inputs()[name] = to_string(v);
        return v;
    }

    int stationary() {
        auto [n, r] = sector();
        ChainParams params{rational_arg(req_.alpha, "alpha"), rational_arg(req_.beta, "beta"),
                           rational_arg(req_.q, "q")};
        MainTheoremReport report = verify_main_theorem(n, r, params, limits_);
        ordered_json states = ordered_json::array();
        for (const StateComparison& s : report.states) {
            states.push_back({{"state", s.state.to_string()},
                              {"stationary", to_string(s.stationary)},
                              {"predicted", to_string(s.predicted)},
                              {"match", s.match}});
            text_ << "pi(" << s.state.to_string() << ") = " << to_string(s.stationary) << " predicted "
                  << to_string(s.predicted) << " match=" << (s.match ? "true" : "false") << '\n';
        }
        results()["partition_function"] = report.partition.to_string();
        results()["states"] = std::move(states);
        results()["match"] = report.ok();
        text_ << "Z = " << report.partition.to_string() << '\n' << "match=" << (report.ok() ? "true" : "false") << '\n';
        return report.ok() ? 0 : 1;
    }

    int verify() {
        check_sector_size(req_.max_n);
        std::vector<std::string> names = req_.suites.empty() ? suite_names() : req_.suites;
        inputs()["max_n"] = str(req_.max_n);
        inputs()["suites"] = names;
        ordered_json list = ordered_json::array();
        bool ok = true;
        for (const std::string& name : names) {
            SuiteResult s = run_suite(name, req_.max_n, limits_);
            ok = ok && s.ok();
            list.push_back({{"name", s.name}, {"checked", str(s.checked)}, {"failures", s.failures}, {"ok", s.ok()}});
            text_ << s.name << ": " << s.checked << " checks, " << s.failures.size() << " failures\n";
            for (const std::string& f : s.failures) text_ << "  " << f << '\n';
        }
        results()["suites"] = std::move(list);
        results()["ok"] = ok;
        text_ << (ok ? "ok" : "FAILED") << '\n';
        return ok ? 0 : 1;
    }

    int count() {
        const auto& args = req_.count_args;
        Integer value;
        auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
            if (args.size() < lo || args.size() > hi) throw RequestError(std::string("usage: count ") + usage);
        };
        switch (req_.count) {
            case CountKind::Mct:
                need(2, 3, "--mct n r [k]");
                if (args[1] > args[0]) throw RequestError("r must not exceed n");
                inputs()["kind"] = "mct";
                inputs()["n"] = str(args[0]);
                inputs()["r"] = str(args[1]);
                if (args.size() == 3) {
                    inputs()["k"] = str(args[2]);
                    if (args[1] + args[2] > args[0]) throw RequestError("k + r must not exceed n");
                    value = mct_count_by_k(args[0], args[1], args[2]);
                } else {
                    value = mct_count(args[0], args[1]);
                }
                break;
            case CountKind::Classes:
                need(2, 2, "--classes n r");
                if (args[1] > args[0]) throw RequestError("r must not exceed n");
                inputs()["kind"] = "classes";
                inputs()["n"] = str(args[0]);
                inputs()["r"] = str(args[1]);
                value = equivalence_class_count(args[0], args[1]);
                break;
            case CountKind::Macmahon:
                need(3, 3, "--macmahon a b c");
                inputs()["kind"] = "macmahon";
                inputs()["a"] = str(args[0]);
                inputs()["b"] = str(args[1]);
                inputs()["c"] = str(args[2]);
                value = macmahon_box(args[0], args[1], args[2]);
                break;
        }
        results()["value"] = value.get_str();
        text_ << value.get_str() << '\n';
        return 0;
    }

    int render() {
        const Word w = word();
        const Tiling t = chosen_tiling(w);
        std::optional<Filling> filling;
        if (req_.filling_index) {
            std::vector<Filling> all = enumerate_fillings(t, limits_);
            if (*req_.filling_index >= all.size())
                throw RequestError("filling index " + str(*req_.filling_index) + " out of range (" +
                                   str(all.size()) + " fillings)");
            filling = all[*req_.filling_index];
            inputs()["filling"] = str(*req_.filling_index);
        }
        const std::string svg = render_svg(w, filling, t);
        if (!req_.out_file) {
            if (req_.output == OutputFormat::Json) {
                results()["svg"] = svg;
            } else {
                text_ << svg;
            }
            return 0;
        }
        std::ofstream file(*req_.out_file, std::ios::binary);
        if (!file) throw RequestError("cannot open " + *req_.out_file + " for writing");
        file << svg;
        if (!file) throw RequestError("failed writing " + *req_.out_file);
        results()["file"] = *req_.out_file;
        results()["bytes"] = str(svg.size());
        text_ << "wrote " << *req_.out_file << " (" << svg.size() << " bytes)\n";
        return 0;
    }

    const CommandRequest& req_;
    std::ostream& out_;
    Limits limits_;
    bool bounded_ = true;
    ordered_json report_;
    std::ostringstream text_;
};

}  // namespace

int run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
    try {
        return Context(request, out).dispatch();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace rat::cli

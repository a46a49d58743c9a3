// cli.cpp - argument parsing and command dispatch.
#include "pugs/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pugs/bounds.hpp"
#include "pugs/findpugs.hpp"
#include "pugs/json_io.hpp"
#include "pugs/oracle.hpp"
#include "pugs/render.hpp"

namespace pugs {

namespace {

struct Options {
    int circles = 0;
    double c = 1.0;
    bool relaxed = false;
    long long samples = 10000;
    int width = 800;
    int height = 800;
    double extent = 0.0;  // 0 = frame all circles with half a step of padding
    std::string output;
    std::string format = "svg";
    int threads = 0;  // 0 = all cores, 1 = serial reference path
    std::string solution_path;
};

ExecMode setup_threads(int threads) {
    if (threads == 1) return ExecMode::kSerial;
#ifdef _OPENMP
    if (threads > 1) omp_set_num_threads(threads);
#endif
    return ExecMode::kParallel;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty())
        std::cout << text;
    else
        write_file(output, text);
}

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

int cmd_findpugs(const Options& o) {
    const ExecMode mode = setup_threads(o.threads);
    const PrototypeSolution sol = find_pugs(o.circles, o.c, !o.relaxed, mode);
    emit(solution_to_json(sol), o.output);
    return 0;
}

int cmd_bounds(const Options& o) {
    emit(bounds_to_json(o.circles), o.output);
    return 0;
}

int cmd_verify(const Options& o) {
    const ExecMode mode = setup_threads(o.threads);
    const PrototypeSolution sol = solution_from_json(read_file(o.solution_path));
    const ClassificationReport report = verify_separation(sol, o.samples, mode);
    const std::string text = report_to_json(report);
    std::cout << text;
    if (!o.output.empty()) write_file(o.output, text);
    return report.perfect() ? 0 : 1;
}

int cmd_render(const Options& o) {
    const ExecMode mode = setup_threads(o.threads);
    const PrototypeSolution sol = solution_from_json(read_file(o.solution_path));
    const double extent = o.extent > 0.0 ? o.extent : default_extent(sol);
    const RasterGrid grid = rasterize_regions(sol, o.width, o.height, extent, mode);
    const FigureStyle style = default_style(sol.circles());
    const FigureFormat format =
        o.format == "ppm" ? FigureFormat::kPpm : FigureFormat::kSvg;
    write_file(o.output, render_figure(grid, sol, style, format));
    return 0;
}

// Line chart of the first-order counts ceil(t*pi) against the second-order
// series counts for t = 1..T; the two series overlap from t = 4 on.
std::string chart_svg(int T) {
    std::vector<int> first;
    std::vector<int> second;
    int ymax = 1;
    for (int t = 1; t <= T; ++t) {
        first.push_back(first_order_count(t));
        second.push_back(second_order_count(t));
        ymax = std::max({ymax, first.back(), second.back()});
    }

    const double width = 640.0, height = 420.0;
    const double left = 56.0, right = 16.0, top = 24.0, bottom = 48.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const auto x_px = [&](int t) {
        return T == 1 ? left + plot_w / 2.0
                      : left + plot_w * (t - 1) / static_cast<double>(T - 1);
    };
    const auto y_px = [&](double v) { return top + plot_h * (1.0 - v / ymax); };

    const auto points = [&](const std::vector<int>& series) {
        std::string s;
        for (int t = 1; t <= T; ++t) {
            if (!s.empty()) s += " ";
            s += fmt2(x_px(t)) + "," + fmt2(y_px(series[static_cast<size_t>(t - 1)]));
        }
        return s;
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
           "height=\"420\" viewBox=\"0 0 640 420\">\n";
    svg += "<rect width=\"640\" height=\"420\" fill=\"#ffffff\"/>\n";
    svg += "<line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(top + plot_h) + "\" x2=\"" +
           fmt2(left + plot_w) + "\" y2=\"" + fmt2(top + plot_h) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(top) + "\" x2=\"" +
           fmt2(left) + "\" y2=\"" + fmt2(top + plot_h) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    const int stride = std::max(1, T / 10);
    for (int t = 1; t <= T; t += stride) {
        svg += "<text x=\"" + fmt2(x_px(t)) + "\" y=\"" + fmt2(top + plot_h + 16.0) +
               "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
               std::to_string(t) + "</text>\n";
    }
    svg += "<text x=\"" + fmt2(left - 8.0) + "\" y=\"" + fmt2(top + plot_h) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">0</text>\n";
    svg += "<text x=\"" + fmt2(left - 8.0) + "\" y=\"" + fmt2(top + 4.0) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" +
           std::to_string(ymax) + "</text>\n";
    svg += "<text x=\"" + fmt2(left + plot_w / 2.0) + "\" y=\"" + fmt2(height - 12.0) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
           "circle index t</text>\n";

    svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"" +
           points(first) + "\"/>\n";
    svg += "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" "
           "stroke-dasharray=\"6,4\" points=\"" +
           points(second) + "\"/>\n";

    svg += "<text x=\"" + fmt2(left + 12.0) + "\" y=\"" + fmt2(top + 16.0) +
           "\" font-family=\"monospace\" font-size=\"12\" fill=\"#1f77b4\">"
           "first-order ceil(t*pi)</text>\n";
    svg += "<text x=\"" + fmt2(left + 12.0) + "\" y=\"" + fmt2(top + 32.0) +
           "\" font-family=\"monospace\" font-size=\"12\" fill=\"#d62728\">"
           "second-order series</text>\n";
    svg += "</svg>\n";
    return svg;
}

int cmd_chart(const Options& o) {
    emit(chart_svg(o.circles), o.output);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 1 ? static_cast<size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

    static const std::vector<std::string> commands = {"bounds", "findpugs", "verify",
                                                      "render", "chart"};
    const bool has_command =
        !args.empty() &&
        std::find(commands.begin(), commands.end(), args[0]) != commands.end();
    const bool wants_help =
        !args.empty() && (args[0] == "-h" || args[0] == "--help");
    if (!has_command && !wants_help) args.insert(args.begin(), "findpugs");

    CLI::App app{"Minimal prototype configurations that let a 1-nearest-neighbor "
                 "classifier perfectly separate concentric circular classes"};
    app.require_subcommand(1);

    Options fp, bd, vf, rd, ch;

    CLI::App* s_find = app.add_subcommand(
        "findpugs", "Greedy per-circle count search (default command)");
    s_find->add_option("--circles", fp.circles, "Number of circles")
        ->required()
        ->check(CLI::PositiveNumber);
    s_find->add_option("--c", fp.c, "Radius step between circles")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s_find->add_flag("--relaxed", fp.relaxed,
                     "Allow equality in the separation inequalities");
    s_find->add_option("--threads", fp.threads, "Worker threads (0 = all, 1 = serial)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    s_find->add_option("--output", fp.output, "Write JSON here instead of stdout");

    CLI::App* s_bounds =
        app.add_subcommand("bounds", "Analytic per-circle count table as JSON");
    s_bounds->add_option("--circles", bd.circles, "Number of circles")
        ->required()
        ->check(CLI::PositiveNumber);
    s_bounds->add_option("--output", bd.output, "Write JSON here instead of stdout");

    CLI::App* s_verify = app.add_subcommand(
        "verify", "Brute-force 1NN check of a solution file; exit 0 iff perfect");
    s_verify->add_option("solution", vf.solution_path, "Solution JSON file")
        ->required();
    s_verify->add_option("--samples", vf.samples, "Uniform samples per circle (>= 8)")
        ->capture_default_str();
    s_verify->add_option("--threads", vf.threads, "Worker threads (0 = all, 1 = serial)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    s_verify->add_option("--output", vf.output, "Also write the report here");

    CLI::App* s_render =
        app.add_subcommand("render", "Decision-region figure from a solution file");
    s_render->add_option("solution", rd.solution_path, "Solution JSON file")
        ->required();
    s_render->add_option("--width", rd.width, "Pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s_render->add_option("--height", rd.height, "Pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s_render->add_option("--extent", rd.extent,
                         "Half-width of the viewed square (default: fit all circles)")
        ->check(CLI::PositiveNumber);
    s_render->add_option("--format", rd.format, "Figure format")
        ->check(CLI::IsMember({"svg", "ppm"}))
        ->capture_default_str();
    s_render->add_option("--threads", rd.threads, "Worker threads (0 = all, 1 = serial)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    s_render->add_option("--output", rd.output, "Figure file to write")->required();

    CLI::App* s_chart = app.add_subcommand(
        "chart", "SVG chart comparing first- and second-order counts");
    s_chart->add_option("--circles", ch.circles, "Largest circle index to plot")
        ->required()
        ->check(CLI::PositiveNumber);
    s_chart->add_option("--output", ch.output, "Write SVG here instead of stdout");

    std::vector<const char*> cargv;
    cargv.reserve(args.size() + 1);
    cargv.push_back("findpugs");
    for (const std::string& a : args) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (s_find->parsed()) return cmd_findpugs(fp);
        if (s_bounds->parsed()) return cmd_bounds(bd);
        if (s_verify->parsed()) return cmd_verify(vf);
        if (s_render->parsed()) return cmd_render(rd);
        if (s_chart->parsed()) return cmd_chart(ch);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace pugs

// polypart: partition simple orthogonal polygons into pieces of at most 8
// vertices and derive mobile-guard patrols for them.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "polypart/guards.hpp"
#include "polypart/io.hpp"
#include "polypart/oracle.hpp"
#include "polypart/partition.hpp"
#include "polypart/polygen.hpp"

namespace {

using namespace polypart;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_error, "cannot write " + path);
  out << text;
}

std::string write_dump(const theorem_violation& tv) {
  const std::string path = "polypart_dump.txt";
  std::ofstream out(path, std::ios::binary);
  out << tv.instance_dump;
  return path;
}

struct OutputOptions {
  std::string json_path;
  std::string svg_path;
  bool trace = false;
};

void emit_outputs(const RectilinearPolygon& input, const PartitionResult& res,
                  const std::vector<Patrol>* patrols, const OutputOptions& opt) {
  if (opt.trace) {
    int order = 1;
    for (const AppliedCut& ac : res.cuts_applied)
      std::printf("cut %d: host n=%d  %s\n", order++, ac.host_n,
                  ac.case_label.c_str());
  }
  if (!opt.json_path.empty())
    spill(opt.json_path, result_to_json(input, res, patrols));
  if (!opt.svg_path.empty())
    spill(opt.svg_path, result_to_svg(input, res, patrols));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition simple orthogonal polygons into pieces of at most "
               "8 vertices, with mobile-guard patrols"};
  app.require_subcommand(1);

  std::string in_path, pieces_path, out_path;
  OutputOptions opt;
  int gen_n = 20;
  std::uint64_t gen_seed = 1;

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--json", opt.json_path, "write the result as JSON");
    cmd->add_option("--svg", opt.svg_path, "write a figure as SVG");
    cmd->add_flag("--trace", opt.trace, "print the case label of every cut");
  };

  CLI::App* cmd_partition =
      app.add_subcommand("partition", "partition a polygon file");
  cmd_partition->add_option("file", in_path)->required();
  add_output_flags(cmd_partition);

  CLI::App* cmd_guards = app.add_subcommand(
      "guards", "partition a polygon file and assign patrols");
  cmd_guards->add_option("file", in_path)->required();
  add_output_flags(cmd_guards);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "check a pieces JSON against a polygon");
  cmd_verify->add_option("file", in_path)->required();
  cmd_verify->add_option("--pieces", pieces_path, "result JSON with pieces")
      ->required();

  CLI::App* cmd_generate =
      app.add_subcommand("generate", "emit a random polygon in text format");
  cmd_generate->add_option("--n", gen_n, "vertex count (even, >= 4)");
  cmd_generate->add_option("--seed", gen_seed, "random seed");
  cmd_generate->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* cmd_lemma = app.add_subcommand(
      "lemma6-table", "exhaustively check the residue table's soundness");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_partition->parsed() || cmd_guards->parsed()) {
      const RectilinearPolygon p = parse_polygon_text(slurp(in_path));
      const PartitionResult res = partition(p);
      std::vector<Patrol> patrols;
      const bool with_guards = cmd_guards->parsed();
      if (with_guards) {
        for (size_t i = 0; i < res.pieces.size(); ++i)
          patrols.push_back(
              patrol_for_piece(res.pieces[i], static_cast<int>(i)));
        if (!patrols_noncrossing(patrols))
          throw theorem_violation("patrols cross",
                                  dump_instance(p, "patrols cross"));
      }
      emit_outputs(p, res, with_guards ? &patrols : nullptr, opt);
      std::printf("n=%d pieces=%d bound=%d", p.n(), res.count, bound(p.n()));
      if (with_guards)
        std::printf(" patrols=%d", static_cast<int>(patrols.size()));
      std::printf("\n");
      return 0;
    }
    if (cmd_verify->parsed()) {
      const RectilinearPolygon p = parse_polygon_text(slurp(in_path));
      const auto pieces = pieces_from_json(slurp(pieces_path));
      const PartitionReport rep = verify_partition(p, pieces);
      std::printf("tiles: %s\nvalid: %s\nsmall: %s\nbudget: %s\n",
                  rep.tiles_exactly ? "yes" : "no",
                  rep.pieces_valid ? "yes" : "no",
                  rep.pieces_small ? "yes" : "no",
                  rep.count_within_bound ? "yes" : "no");
      if (rep.uncovered_cell)
        std::printf("uncovered cell at (%lld, %lld)\n",
                    static_cast<long long>(rep.uncovered_cell->x),
                    static_cast<long long>(rep.uncovered_cell->y));
      if (rep.overlap_cell)
        std::printf("overlapping cell at (%lld, %lld)\n",
                    static_cast<long long>(rep.overlap_cell->x),
                    static_cast<long long>(rep.overlap_cell->y));
      return rep.ok() ? 0 : 2;
    }
    if (cmd_generate->parsed()) {
      const RectilinearPolygon p = generate(gen_n, gen_seed);
      const std::string text = emit_polygon_text(p);
      if (out_path.empty()) std::fputs(text.c_str(), stdout);
      else spill(out_path, text);
      return 0;
    }
    if (cmd_lemma->parsed()) {
      const Lemma6Report rep = verify_lemma6_table();
      std::printf("entries checked: %lld\nunsound: %lld\nguard needed: %s\n",
                  rep.checked, rep.unsound,
                  rep.exclusion_needed ? "yes" : "no");
      if (rep.unsound)
        std::printf("first unsound: %s\n", rep.first_unsound.c_str());
      return rep.unsound == 0 ? 0 : 2;
    }
  } catch (const theorem_violation& tv) {
    const std::string path = write_dump(tv);
    std::fprintf(stderr, "theorem violation: %s\ninstance dumped to %s\n",
                 tv.what(), path.c_str());
    return 3;
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

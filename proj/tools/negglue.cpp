#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "negglue/compiler.hpp"
#include "negglue/errors.hpp"
#include "negglue/gadgets.hpp"
#include "negglue/render.hpp"
#include "negglue/strengths.hpp"
#include "negglue/verifier.hpp"

namespace fs = std::filesystem;
using namespace negglue;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

GadgetLibrary library(const std::string& path) {
  return path.empty() ? build_default_library() : load_gadgets(path);
}

std::string extension(RenderFormat f) { return f == RenderFormat::Svg ? ".svg" : ".txt"; }

std::string rendered(const PositionedAssembly& a, const RenderOptions& opts) {
  std::string s = render(a, opts);
  if (opts.format == RenderFormat::Ascii) s += '\n';
  return s;
}

std::string meta_text(const CompiledSystem& cs) {
  const long long k = description_bits(cs.input);
  const auto plan = base_conversion_plan(k);
  std::ostringstream os;
  os << "input_cells " << cs.input.cells().size() << '\n';
  os << "scale " << kTargetScale << '\n';
  os << "target_cells " << cs.target.cells().size() << '\n';
  os << "instructions " << cs.seq.moves.size() << '\n';
  os << "sequence " << cs.seq.text() << '\n';
  os << "sections " << cs.tape.sections << '\n';
  os << "tape_tiles " << cs.tape_tile_count() << '\n';
  os << "tile_types " << cs.tile_type_count() << '\n';
  os << "c_garbage " << cs.policy.c_garbage << '\n';
  os << "description_bits " << k << '\n';
  os << "plan_base " << plan.b << '\n';
  os << "plan_digits " << plan.d << '\n';
  os << "plan_tape_tiles " << plan.tape_tiles << '\n';
  os << "plan_tm_tiles " << plan.tm_tiles << '\n';
  return os.str();
}

int cmd_compile(const std::string& shape_file, const std::string& out_dir, const std::string& gadgets, int tau) {
  const Shape sh = parse_shape(read_file(shape_file));
  const CompiledSystem cs = compile(sh, library(gadgets), tau);
  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "system.txt", serialize_compiled(cs));
  const std::string meta = meta_text(cs);
  write_file(fs::path(out_dir) / "metadata.txt", meta);
  std::cout << meta;
  return kPass;
}

fs::path system_file(const std::string& system) {
  fs::path p(system);
  if (fs::is_directory(p)) p /= "system.txt";
  return p;
}

int cmd_simulate(const std::string& system, std::string out_dir, const std::string& mode, std::size_t horizon,
                 const RenderOptions& ropts) {
  const fs::path file = system_file(system);
  const CompiledSystem cs = parse_compiled(read_file(file.string()), file.string());
  if (out_dir.empty()) out_dir = file.parent_path().empty() ? "." : file.parent_path().string();
  fs::create_directories(out_dir);
  const fs::path out(out_dir);

  if (mode == "explore") {
    std::string report;
    int status = kPass;
    try {
      const ProbeReport pr = adversarial_probe(cs, horizon);
      report = pr.text();
      status = pr.pass ? kPass : kFail;
    } catch (const InconclusiveVerdict& e) {
      report = std::string("inconclusive ") + e.what() + "\npass false\n";
      status = kFail;
    }
    write_file(out / "probe.txt", report);
    std::cout << report;
    return status;
  }

  const fs::path frames = out / "frames";
  fs::create_directories(frames);
  AuditOptions opts;
  opts.on_step = [&](std::size_t step, const std::string& phase, const PositionedAssembly& shape) {
    if (step % ropts.frame_every != 0) return;
    std::ostringstream name;
    name << std::setw(4) << std::setfill('0') << step << '-' << phase << extension(ropts.format);
    write_file(frames / name.str(), rendered(shape, ropts));
  };
  const AuditReport r = audit_run(cs, opts);
  std::string log;
  for (const auto& e : r.log) log += e.line() + '\n';
  write_file(out / "reactions.log", log);
  write_file(out / "audit.txt", r.text());
  if (!r.final_assembly.empty()) write_file(out / ("final" + extension(ropts.format)), rendered(r.final_assembly, ropts));
  std::cout << r.text();
  return r.pass() ? kPass : kFail;
}

int cmd_verify(const std::string& kind, const std::string& gadgets, int tau) {
  const GadgetLibrary lib = library(gadgets);
  bool ok = true;
  if (kind == "inequalities") {
    const InequalityReport rep = verify_inequalities(lib.strengths, tau);
    for (const auto& r : rep.rows)
      std::cout << (r.holds ? "pass " : "FAIL ") << r.row.text() << " = " << r.value << '\n';
    for (const auto& [g, v] : rep.strong_glues) std::cout << "FAIL single glue " << g << " = " << v << '\n';
    for (const auto& u : rep.unresolved) std::cout << "FAIL unresolved " << u << '\n';
    ok = rep.pass;
  } else if (kind == "gadgets") {
    SystemConfig cfg = library_config(lib);
    cfg.tau = tau;
    for (const auto& g : lib.gadgets) {
      const StabilityVerdict v = is_tau_stable(g.body, cfg);
      std::cout << (v.stable ? "pass " : "FAIL ") << g.name << ' ' << category_name(g.category) << ' '
                << g.body.size() << " tiles " << (v.kind == VerdictKind::Exact ? "exact" : "bounded") << '\n';
      ok = ok && v.stable;
    }
  } else {
    for (const auto& t : lib.traces) {
      try {
        const auto events = replay(t, lib);
        std::cout << "pass " << t.name << ' ' << events.size() << " steps\n";
      } catch (const TraceDivergence& e) {
        std::cout << "FAIL " << t.name << ": " << e.what() << '\n';
        ok = false;
      }
    }
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negglue: negative-glue shape compiler and simulator"};
  app.require_subcommand(1);

  std::string shape_file, out_dir, gadgets, system, mode = "scripted", format = "svg", kind;
  int tau = 10;
  std::size_t horizon = 1000, frame_every = 1;

  auto* compile_cmd = app.add_subcommand("compile", "compile a shape into a tile system");
  compile_cmd->add_option("--shape", shape_file, "shape file ('#' cells)")->required();
  compile_cmd->add_option("--out", out_dir, "output directory")->required();
  compile_cmd->add_option("--gadgets", gadgets, "gadget library file");
  compile_cmd->add_option("--tau", tau, "temperature");

  auto* sim = app.add_subcommand("simulate", "run a compiled system");
  sim->add_option("system", system, "compiled directory or system file")->required();
  sim->add_option("--out", out_dir, "output directory (defaults to the system directory)");
  sim->add_option("--mode", mode, "scripted or explore")->check(CLI::IsMember({"scripted", "explore"}));
  sim->add_option("--horizon", horizon, "assembly budget for explore mode");
  sim->add_option("--render", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  sim->add_option("--frame-every", frame_every, "snapshot cadence")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check the gadget library");
  verify->add_option("kind", kind, "inequalities, gadgets or traces")
      ->required()
      ->check(CLI::IsMember({"inequalities", "gadgets", "traces"}));
  verify->add_option("--gadgets", gadgets, "gadget library file");
  verify->add_option("--tau", tau, "temperature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*compile_cmd) return cmd_compile(shape_file, out_dir, gadgets, tau);
    if (*sim) {
      RenderOptions ropts;
      ropts.format = format == "ascii" ? RenderFormat::Ascii : RenderFormat::Svg;
      ropts.frame_every = frame_every;
      return cmd_simulate(system, out_dir, mode, horizon, ropts);
    }
    return cmd_verify(kind, gadgets, tau);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

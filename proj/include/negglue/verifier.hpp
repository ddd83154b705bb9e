#pragma once

#include <functional>
#include <string>
#include <vector>

#include "negglue/compiler.hpp"
#include "negglue/gadgets.hpp"
#include "negglue/reaction.hpp"

namespace negglue {

struct PipelineEvent {
  std::string phase;  // overlay, read, reduce, walk, extend
  ReactionEvent event;

  std::string line() const { return phase + " " + event.line(); }
};

struct AuditReport {
  std::size_t max_detached_piece = 0;
  std::size_t break_count = 0;
  bool terminal_shape_match = false;
  bool inequality_pass = false;
  std::vector<std::string> trace_divergences;

  std::size_t c_garbage = 0;
  std::size_t combine_count = 0;
  bool terminal = false;  // final assembly is stable and nothing attaches
  std::vector<PipelineEvent> log;
  PositionedAssembly final_assembly;
  /// Every assembly the script passes through, tape and shape side.
  std::vector<Assembly> scripted_states;

  bool pass() const;
  /// One "key value" line per field.
  std::string text() const;
};

struct AuditOptions {
  /// Called after each step with the phase and the growing shape.
  std::function<void(std::size_t, const std::string&, const PositionedAssembly&)> on_step;
  bool check_terminal = true;
};

/// Runs overlay, then read / reduce / walk / extend per instruction, checking
/// every strength with the engine. Stops at the first divergence.
AuditReport audit_run(const CompiledSystem& cs, const AuditOptions& opts = {});

struct Fig1Demo {
  SystemConfig cfg;
  std::vector<ReactionEvent> events;
  PositionedAssembly combined;
  std::vector<PositionedAssembly> pieces;  // after the break, row-major order of their first tile
};

/// The tau=1 attach-then-detach example.
Fig1Demo fig1_demo();
/// Supply of the example: the three-tile assembly and the single tile.
SystemConfig fig1_config();

struct ProbeReport {
  std::size_t horizon = 0;
  std::size_t explored = 0;
  std::size_t c_garbage = 0;
  std::size_t frontier_hits = 0;  // explored assemblies that are scripted or target terminals
  std::vector<Assembly> violations;
  bool pass = false;

  std::string text() const;
};

/// Bounded exploration of every producible assembly up to `horizon`
/// assemblies. Throws InconclusiveVerdict if the closure does not saturate.
ProbeReport adversarial_probe(const SystemConfig& cfg, const std::vector<Assembly>& frontier, const Shape& target,
                              std::size_t c_garbage, std::size_t horizon, std::size_t max_size);
ProbeReport adversarial_probe(const CompiledSystem& cs, std::size_t horizon);

/// Glue labels facing across the boundary of `piece` against `host`, joined with '+'.
std::string contact_expression(const PositionedAssembly& host, const PositionedAssembly& piece);

}  // namespace negglue

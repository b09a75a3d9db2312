#include <sstream>

#include "render/render.hpp"

namespace scatterscore::render {

namespace {

void print_mform(std::ostream& out, const engine::CompiledSystem& sys,
                 const engine::MForm& mf) {
  out << '(';
  for (std::size_t i = 0; i < mf.size(); ++i) {
    if (i) out << " | ";
    out << sys.form_text(i, mf[i]);
  }
  out << ')';
}

}  // namespace

std::string_view status_name(engine::TraceStatus status) {
  switch (status) {
    case engine::TraceStatus::terminal: return "terminal";
    case engine::TraceStatus::stuck: return "stuck";
    case engine::TraceStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

std::string export_trace(const engine::CompiledSystem& sys,
                         const engine::DerivationTrace& trace) {
  std::ostringstream out;
  out << "start: ";
  print_mform(out, sys, trace.start);
  out << '\n';
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& step = trace.steps[k];
    out << "step " << (k + 1) << ": Q=(";
    for (std::size_t i = 0; i < step.tuple.labels.size(); ++i) {
      if (i) out << ',';
      out << step.tuple.labels[i];
    }
    out << ") pos=[";
    for (std::size_t i = 0; i < step.embeddings.size(); ++i) {
      if (i) out << '|';
      out << '(';
      for (std::size_t j = 0; j < step.embeddings[i].positions.size(); ++j) {
        if (j) out << ',';
        out << step.embeddings[i].positions[j];
      }
      out << ')';
    }
    out << "] => ";
    print_mform(out, sys, step.result);
    out << '\n';
  }
  out << "status: " << status_name(trace.status) << '\n';
  return out.str();
}

}  // namespace scatterscore::render

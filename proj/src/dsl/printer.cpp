#include "dsl/printer.hpp"

#include <sstream>

namespace scatterscore::dsl {

namespace {

void print_attrs(std::ostream& out, const AttributeVector& attrs) {
  out << '[' << operation_name(attrs.op) << ", " << duration_name(attrs.dur)
      << ", ";
  if (attrs.reg) {
    out << *attrs.reg;
  } else {
    out << '-';
  }
  out << ", " << dynamic_name(attrs.dyn) << ']';
}

void print_payload(std::ostream& out, const TokenPayload& payload) {
  if (const auto* note = std::get_if<NotePayload>(&payload)) {
    out << "note " << note->pitch;
  } else if (std::get_if<RestPayload>(&payload)) {
    out << "rest";
  } else if (const auto* chord = std::get_if<ChordPayload>(&payload)) {
    out << "chord";
    for (std::size_t i = 0; i < chord->pitches.size(); ++i) {
      out << (i ? " + " : " ") << chord->pitches[i];
    }
  }
}

void print_seq(std::ostream& out, const std::vector<std::string>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ' ';
    out << seq[i];
  }
}

void print_rule(std::ostream& out, const ScatteredRule& r) {
  out << "    rule " << r.label << " : ";
  if (r.lhs.size() == 1) {
    out << r.lhs[0];
  } else {
    out << '(';
    for (std::size_t i = 0; i < r.lhs.size(); ++i) {
      if (i) out << ", ";
      out << r.lhs[i];
    }
    out << ')';
  }
  out << " -> ";
  if (r.rhs.size() == 1) {
    print_seq(out, r.rhs[0]);
  } else {
    out << '(';
    for (std::size_t i = 0; i < r.rhs.size(); ++i) {
      if (i) out << ", ";
      print_seq(out, r.rhs[i]);
    }
    out << ')';
  }
  out << " ;\n";
}

}  // namespace

std::string print_system(const GrammarSystem& s) {
  std::ostringstream out;
  out << "system " << s.name << " {\n";
  for (const auto& c : s.components) {
    out << "  component " << c.name << " {\n";
    out << "    start " << c.start << '\n';
    out << "    nonterminals";
    for (const auto& n : c.nonterminals) out << ' ' << n;
    out << " ;\n";
    out << "    program " << c.program << " ;\n";
    out << "    octave_offset " << c.octave_offset << " ;\n";
    if (!c.tokens.empty()) {
      out << "    tokens {\n";
      for (const auto& t : c.tokens) {
        out << "      " << t.name << " = ";
        print_payload(out, t.payload);
        out << ' ';
        print_attrs(out, t.attrs);
        out << " ;\n";
      }
      out << "    }\n";
    }
    for (const auto& r : c.rules) print_rule(out, r);
    out << "  }\n";
  }
  out << "  sync {\n";
  for (const auto& q : s.sync) {
    out << "    (";
    for (std::size_t i = 0; i < q.labels.size(); ++i) {
      if (i) out << ", ";
      out << q.labels[i];
    }
    out << ")\n";
  }
  out << "  }\n";
  out << "}\n";
  return out.str();
}

}  // namespace scatterscore::dsl

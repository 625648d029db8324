#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opns/presentation.hpp"

namespace opns {

// Coefficient linear in the declared parameters: constant + sum c_i * p_i.
// Identity templates are linear in their parameters, which keeps boundary
// detection exact and division-free.
struct LinearForm {
  Rat constant = 0;
  std::map<int, Rat> coeffs;

  bool isZero() const;
  bool isConstant() const { return coeffs.empty(); }
  Rat eval(const std::vector<Rat>& paramValues) const;
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator*=(const Rat& c);
};

struct TemplateIdentity {
  std::vector<std::pair<LinearForm, SymTree>> terms;
  std::string text;
};

struct ScanSpec {
  std::vector<std::vector<Rat>> samples; // one value per declared parameter
};

// A parsed .ops file. Presentation identities are instantiated per parameter
// point; files without `param` declarations instantiate trivially.
struct ParsedFile {
  std::string name;
  std::vector<GeneratorSpec> generators;
  std::vector<std::string> params;
  std::vector<TemplateIdentity> identities;
  std::optional<ScanSpec> scan;

  bool parametric() const { return !params.empty(); }
};

// Grammar, one statement per ';':
//   name "Label";
//   op NAME : ARITY [plain|sym|antisym];
//   param a, b;
//   scan (a, b): (1, 0), (1, -1);
//   <expr> = <expr>;        identities; also bare <expr>; meaning = 0
// Expressions: variables are undeclared identifiers, generator applications
// are prefix f(u,v,...) or single infix x*y for symbolic binary names,
// coefficients are rational literals or parameters attached by
// juxtaposition. Infix chains must be parenthesized. Errors carry
// line:column positions.
ParsedFile parseDsl(const std::string& text, const std::string& filename = "<input>");

Presentation instantiate(const ParsedFile& f, const std::vector<Rat>& paramValues = {});

// Canonical DSL text; parseDsl(printPresentation(p)) reproduces p.
std::string printPresentation(const Presentation& p);

ParsedFile loadOpsFile(const std::string& path);

} // namespace opns

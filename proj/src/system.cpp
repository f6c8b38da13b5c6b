#include "locuskit/system.hpp"

#include <algorithm>

#include "locuskit/errors.hpp"

namespace locuskit {

void PolySystem::validate() const {
  if (!context) throw InputError("system without context");
  if (generators.empty()) throw InputError("system has no polynomials");
  for (const auto& g : generators) {
    if (g.is_zero()) throw InputError("zero generator in system");
    if (!same_context(g.context(), context))
      throw InputError("generator in a foreign context", "E_CONTEXT");
  }
  for (const auto& v : elim_vars) context->require(v);
  if (retained_vars().empty())
    throw InputError("at least one variable must be retained");
}

std::vector<std::string> PolySystem::retained_vars() const {
  std::vector<std::string> out;
  for (const auto& n : context->names())
    if (std::find(elim_vars.begin(), elim_vars.end(), n) == elim_vars.end())
      out.push_back(n);
  return out;
}

bool operator==(const PolySystem& a, const PolySystem& b) {
  return *a.context == *b.context && a.elim_vars == b.elim_vars &&
         a.generators == b.generators;
}

}  // namespace locuskit

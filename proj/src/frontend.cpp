#include "depcat/frontend.hpp"

namespace depcat {

LoadedFile load_source(const SourceFile& file) {
  LoadedFile out;
  std::size_t events = 0;
  for (const auto& it : file.items) {
    std::visit(
        [&](const auto& item) {
          using T = std::decay_t<decltype(item)>;
          if constexpr (std::is_same_v<T, TypeConstItem>) {
            out.signature.add_type_constant(item.name, item.telescope);
            ++events;
          } else if constexpr (std::is_same_v<T, TermConstItem>) {
            out.signature.add_term_constant(item.name, item.telescope, item.codomain);
            ++events;
          } else if constexpr (std::is_same_v<T, AxiomItem>) {
            Axiom ax;
            ax.telescope = item.telescope;
            ax.is_type_eq = item.is_type_eq;
            ax.lhs_ty = item.lhs_ty;
            ax.rhs_ty = item.rhs_ty;
            ax.lhs_tm = item.lhs_tm;
            ax.rhs_tm = item.rhs_tm;
            ax.at = item.at;
            out.signature.add_axiom(std::move(ax));
            ++events;
          } else if constexpr (std::is_same_v<T, DefItem>) {
            out.defs.push_back(item);
            // a definition is checked like any other judgement
            out.judgements.push_back(FileJudgement{
                Judgement::tm_of(Ctx{}, item.body, item.type), it.span, false, events});
          } else if constexpr (std::is_same_v<T, CheckItem>) {
            out.judgements.push_back(FileJudgement{item.judgement, it.span, false, events});
          } else if constexpr (std::is_same_v<T, EvalItem>) {
            out.judgements.push_back(FileJudgement{item.judgement, it.span, true, events});
          }
        },
        it.item);
  }
  return out;
}

LoadedFile load_source_text(const std::string& text) { return load_source(parse_file(text)); }

ValidatedSignature validate(const LoadedFile& file, const ValidationOptions& opts) {
  return validate_signature(file.signature, opts);
}

}  // namespace depcat

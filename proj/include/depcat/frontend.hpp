#ifndef DEPCAT_FRONTEND_HPP
#define DEPCAT_FRONTEND_HPP

#include <string>
#include <vector>

#include "depcat/checker.hpp"
#include "depcat/parser.hpp"
#include "depcat/signature.hpp"

namespace depcat {

// A judgement to decide or evaluate, with the signature prefix in force at its
// position in the file.
struct FileJudgement {
  Judgement judgement;
  Span span;
  bool is_eval = false;
  std::size_t signature_prefix;  // number of signature events declared before it
};

struct LoadedFile {
  Signature signature;
  std::vector<FileJudgement> judgements;
  std::vector<DefItem> defs;
};

// Folds parsed items in order: constants and axioms accumulate into the
// signature, defs expand into later items, check/eval items are collected.
LoadedFile load_source(const SourceFile& file);
LoadedFile load_source_text(const std::string& text);

// Validates the full signature (prefix-wise) with the given options.
ValidatedSignature validate(const LoadedFile& file, const ValidationOptions& opts = {});

}  // namespace depcat

#endif

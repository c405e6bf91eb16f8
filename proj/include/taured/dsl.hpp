#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "taured/algebra.hpp"
#include "taured/enumerate.hpp"

namespace taured {

/// One term of a relation: coeff times the path through `arrows`.
struct RelationTerm {
  mpq_class coeff;
  std::vector<std::string> arrows;
};

struct ArrowDecl {
  std::string name;
  std::string source;
  std::string target;
};

/// A module of an explicit inventory. Maps are stored as rational rows; an
/// arrow without a `map` line acts by zero.
struct ModuleDecl {
  std::string name;
  std::vector<std::size_t> dims;
  std::vector<std::pair<std::string, std::vector<std::vector<mpq_class>>>> maps;
};

/// The contents of an .alg file, before anything is built.
struct AlgebraFile {
  std::string name;
  Field field;
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<std::vector<RelationTerm>> relations;
  std::vector<ModuleDecl> modules;  // empty: use the string backend
};

/// Line-oriented grammar:
///   algebra <name>
///   field rational | field fp <p>
///   vertices <id>+
///   arrow <name> <src> <tgt>
///   relation <term> ((+|-) <term>)*    term = [<rational>*] ( <arrow>+ ) | <arrow>+
///   module <name> <dim>+  /  map <arrow> <row> (; <row>)*  /  end
/// with `#` starting a comment. Errors are Error(Parse) for syntax and
/// Error(UnknownVertex), Error(UnknownArrow), Error(InvalidRelation) for
/// semantics; all messages start with "line L, column C".
AlgebraFile parse_algebra_file(const std::string& text);

/// Canonical text; parse_algebra_file(emit_algebra_file(f)) reproduces f.
std::string emit_algebra_file(const AlgebraFile& f);

/// File description of an existing algebra.
AlgebraFile describe_algebra(const Algebra& a, const std::string& name);

/// Builds the algebra, in `field` when given instead of the file's mode.
AlgebraPtr build_algebra_file(const AlgebraFile& f, std::optional<Field> field = std::nullopt);

/// The backend selected by the file: user modules when an inventory block is
/// present, strings otherwise.
Backend file_backend(const AlgebraFile& f, const AlgebraPtr& a);

/// "rational", "fp:<p>" or "fp <p>"; throws Error(Parse).
Field parse_field(const std::string& spec);

}  // namespace taured

#pragma once

#include "hopfcyc/galois.hpp"
#include "hopfcyc/qtorus.hpp"

#include <json.hpp>

#include <string>

namespace hopfcyc {

using Json = nlohmann::ordered_json;

// Reads a document from a file path, or from the argument itself when it
// starts with '{'.  Parse errors become InputError with the byte offset.
Json load_document(const std::string& source);

// Scalars are JSON integers or strings such as "-3/4".
Rational parse_scalar(const Json& j, const std::string& where);
Json scalar_json(const Rational& q);

// {elements: [...], table: [[...]]} with entries given by name or index.
FiniteGroupData parse_group(const Json& j, const std::string& where = "");
Json group_json(const FiniteGroupData& g);

// Either a builtin name (z2, ks3, ...), {group: <group>} for a group
// algebra, or {dim, basis, mult, unit, comult, counit, antipode} with
//   mult    [[i, j, k, c], ...]   e_i e_j has coefficient c at e_k
//   comult  [[i, j, k, c], ...]   Delta(e_i) has coefficient c at e_j (x) e_k
//   unit, counit                  dense vectors
//   antipode                      dense rows, entry [i][j] = coefficient of e_i in S(e_j)
HopfPtr parse_hopf(const Json& j, const std::string& where = "");
// Group algebras are written as {group: ...} unless explicit is set.
Json hopf_json(const HopfAlgebraData& h, bool explicit_constants = false);

// {base: <hopf>, module: <builtin name>},
// {base: <hopf>, modular_pair: {sigma, delta}} (a module over the op-cop algebra), or
// {base: <hopf>, dim, labels?, action: [[h, m, m', c]], coaction: [[m, m', h, c]]}.
// "hopf" is accepted in place of "base".
CrossedModuleData parse_crossed(const Json& j, const std::string& where = "");
Json crossed_json(const CrossedModuleData& m, bool explicit_constants = false);

// {dim, basis, mult, unit} in the same conventions as a Hopf document, or
// {group: <group>} for a group algebra.
AlgebraData parse_algebra(const Json& j, const std::string& where = "");

// One of
//   {builtin: "s3_over_a3"}
//   {algebra, hopf, coaction: [[a, a', h, c]]}
//   {algebra, grading: {group, degree: [...]}}
//   {twisted_group_algebra: {group, omega: [...]}}
//   {crossed_product: {base: <algebra>, group, action: [dense matrices], omega: [...]}}
ComoduleAlgebraData parse_extension(const Json& j, const std::string& where = "");
Json extension_json(const ComoduleAlgebraData& a, bool explicit_constants = false);

// {r, a: [[...]], q_order: <int | "infinite">}
TorusCocycle parse_torus(const Json& j, const std::string& where = "");

// Hopf algebra from a builtin name, a file or inline JSON.
HopfPtr resolve_hopf(const std::string& source);
// Module from a builtin name over h, or a crossed-module document.
CrossedModuleData resolve_module(const HopfPtr& h, const std::string& source);
ComoduleAlgebraData resolve_extension(const std::string& source);

}  // namespace hopfcyc

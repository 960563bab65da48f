#include "verify.hpp"

#include <stdexcept>

#include "asm_algebra.hpp"
#include "congruence.hpp"
#include "embeddings.hpp"

namespace pmh {

namespace {

void append(VerifyReport& into, VerifyReport from) {
  for (auto& check : from.checks) into.checks.push_back(std::move(check));
}

VerifyReport congruence_suite(const SuiteOptions& options, bool broken_control) {
  VerifyReport report;
  for (auto kind : {CongruenceKind::Sylvester, CongruenceKind::Plactic,
                    CongruenceKind::Hypoplactic, CongruenceKind::Total}) {
    VerifyReport one = validate_good_congruence(kind, 3, 3, options.seed);
    for (auto& check : one.checks) {
      check.name = std::string(congruence_name(kind)) + ": " + check.name;
      report.checks.push_back(std::move(check));
    }
  }
  int n1 = std::min(options.max_size / 2, 2), n2 = std::min(options.max_size - n1, 2);
  for (auto kind : {CongruenceKind::Sylvester, CongruenceKind::Total}) {
    VerifyReport one = p_basis_product_check(kind, std::max(n1, 1), std::max(n2, 1));
    for (auto& check : one.checks) {
      check.name = std::string(congruence_name(kind)) + ": " + check.name;
      report.checks.push_back(std::move(check));
    }
  }
  if (broken_control) {
    VerifyReport one = validate_good_congruence(CongruenceKind::BrokenLast, 2, 2, options.seed);
    for (auto& check : one.checks) {
      check.name = "broken control: " + check.name;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace

VerifyReport run_suite(const std::string& suite, const SuiteOptions& options) {
  HopfFault fault = HopfFault::None;
  bool broken_congruence = false, nonclosed_image = false;
  if (options.inject_fault == "drop-shuffle-term") fault = HopfFault::DropShuffleTerm;
  else if (options.inject_fault == "broken-congruence") broken_congruence = true;
  else if (options.inject_fault == "non-closed-image") nonclosed_image = true;
  else if (!options.inject_fault.empty())
    throw std::invalid_argument("unknown fault: " + options.inject_fault);

  VerifyReport report;
  if (suite == "hopf" || suite == "all") {
    append(report, verify_axioms(options.k, options.max_size, fault));
  }
  if (suite == "congruences" || suite == "all") {
    append(report, congruence_suite(options, broken_congruence));
  }
  if (suite == "asm-closure" || suite == "all") {
    append(report, asm_closure_check(options.max_size));
  }
  if (suite == "asm-morphisms" || suite == "all") {
    append(report, asm_morphism_check(std::min(options.max_size, 5)));
  }
  if (suite == "embeddings" || suite == "all") {
    append(report, embeddings_check(options.max_size, nonclosed_image));
  }
  if (report.checks.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return report;
}

}  // namespace pmh

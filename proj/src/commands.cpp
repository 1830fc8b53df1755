#include "isoed/commands.hpp"

#include <functional>

#include "isoed/edim.hpp"
#include "isoed/fixtures.hpp"
#include "isoed/groupbounds.hpp"
#include "isoed/report.hpp"

namespace isoed::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kSoundnessFailure;
  }
}

unsigned long need(const std::optional<unsigned long>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string("--") + flag + " is required for this kind");
  return *v;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Uncertified:
    case ErrorCode::CoprimalityFails:
      return kCertificationRefused;
    case ErrorCode::InternalInconsistency:
      return kSoundnessFailure;
    default:
      return kInvalidInput;
  }
}

int cmd_kernel(const std::filesystem::path& file, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto block = kernel_json(load_instance(file));
    out << (json ? dump_block(block) : render_kernel_text(block));
    return kSuccess;
  });
}

int cmd_subvarieties(const std::filesystem::path& file, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto block = subvarieties_json(load_instance(file));
    out << (json ? dump_block(block) : render_subvarieties_text(block));
    return kSuccess;
  });
}

int cmd_bounds(const std::filesystem::path& file, const BoundsOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto instance = load_instance(file);
    const auto report = bound_report(instance.isogeny);
    if (options.require_lower && !report.lower)
      throw Error(ErrorCode::Uncertified, "subvariety enumeration of '" + instance.name +
                                              "' is not asserted complete; no lower bound can be certified");
    const auto block = bounds_json(instance, report);
    out << (options.json ? dump_block(block) : render_bounds_text(block));
    return kSuccess;
  });
}

int cmd_exact(const std::filesystem::path& file, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto instance = load_instance(file);
    const auto report = bound_report(instance.isogeny);
    auto block = bounds_json(instance, report);
    block["command"] = "exact";
    out << (json ? dump_block(block) : render_bounds_text(block));
    if (report.exact) return static_cast<int>(kSuccess);
    err << "error: "
        << (report.enumeration_complete ? "CoprimalityFails: degree is not coprime to (dim A)!"
                                        : "Uncertified: subvariety enumeration not complete")
        << "; bounds reported instead\n";
    return static_cast<int>(kCertificationRefused);
  });
}

int cmd_groupbound(const GroupBoundArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ojson block;
    block["tool"] = kToolName;
    block["version"] = kToolVersion;
    block["command"] = "groupbound";
    block["kind"] = args.kind;
    ojson inputs;
    inputs["n"] = args.n ? ojson(*args.n) : ojson(nullptr);
    inputs["p"] = args.p ? ojson(*args.p) : ojson(nullptr);
    inputs["chi"] = args.chi ? integer_to_json(*args.chi) : ojson(nullptr);
    block["inputs"] = inputs;

    ojson result;
    const auto& k = args.kind;
    if (k == "rc") {
      result["bound"] = rc_rank_bound(need(args.n, "n"), need(args.p, "p"));
    } else if (k == "abelian" || k == "orbit") {
      const ActionQuery q{need(args.n, "n"), need(args.p, "p"), args.chi.value_or(Integer(1))};
      inputs["chi"] = integer_to_json(q.chi);
      block["inputs"] = inputs;
      if (k == "abelian") {
        const auto r = abelian_rank_bound(q);
        result["raw"] = to_string(r.raw);
        result["bound"] = integer_to_json(r.integral);
        result["rank_g1_cap"] = integer_to_json(r.decomposition->rank_g1_cap);
        result["order_g2_cap"] = integer_to_json(r.decomposition->order_g2_cap);
      } else {
        const auto r = orbit_index_bound(q);
        result["raw"] = to_string(r.raw);
        result["bound"] = integer_to_json(r.integral);
      }
    } else if (k == "symalt") {
      const auto r = sym_alt_degree_bounds(need(args.n, "n"));
      result["symmetric"] = r.symmetric;
      result["alternating"] = r.alternating;
    } else if (k == "local") {
      const auto r = local_ring_bounds(need(args.n, "n"), need(args.p, "p"));
      result["index_exponent_cap"] = r.index_exponent_cap;
      result["rank_cap"] = r.rank_cap;
    } else if (k == "cy") {
      if (!args.chi) throw Error(ErrorCode::InvalidArgument, "--chi is required for this kind");
      result["bound"] = cy_rank_bound(need(args.n, "n"), need(args.p, "p"), *args.chi);
    } else if (k == "todd") {
      result["exponent"] = todd_denominator_exponent(need(args.n, "n"), need(args.p, "p"));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown kind '" + k + "'");
    }
    block["result"] = result;
    out << (args.json ? dump_block(block) : render_groupbound_text(block));
    return kSuccess;
  });
}

int cmd_verify_paper(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto results = run_published_fixtures();
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " | " << r.anchor << " | " << r.detail << "\n";
      if (r.passed) ++passed;
    }
    out << passed << "/" << results.size() << " fixtures passed\n";
    out << kToolName << " " << kToolVersion << "\n";
    return passed == results.size() ? static_cast<int>(kSuccess) : static_cast<int>(kSoundnessFailure);
  });
}

int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.trials == 0) throw Error(ErrorCode::InvalidArgument, "--trials must be at least 1");
    if (options.max_dim == 0) throw Error(ErrorCode::InvalidArgument, "--max-dim must be at least 1");
    if (options.max_entry < 1) throw Error(ErrorCode::InvalidArgument, "--max-entry must be at least 1");
    const auto suites = run_oracle(options);
    out << render_oracle_text(options, suites);
    return oracle_passed(suites) ? static_cast<int>(kSuccess) : static_cast<int>(kSoundnessFailure);
  });
}

}  // namespace isoed::cli

// poskit — exact positivity computations on combinatorial variety models:
// nef/ample tests, Seshadri constants at the sink, nef and Mori cones of
// the blow-up, and toric wall calculus. JSON in, JSON or text out.

#include "poskit/errors.hpp"
#include "poskit/flag.hpp"
#include "poskit/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using poskit::Json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitRefused = 3;
constexpr int kExitInternalError = 4;

struct CommandOutput {
  Json payload;
  std::string message;
  // Plain rendering for text mode; document payloads leave it unset and are
  // printed as JSON so they can be piped into other subcommands.
  std::optional<std::string> text;
};

int cone_dim_bound() {
  const char* env = std::getenv("POSKIT_MAX_CONE_DIM");
  if (env == nullptr || *env == '\0') return poskit::kDefaultConeDimBound;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1)
    throw poskit::InputError("POSKIT_MAX_CONE_DIM must be a positive integer, got '" +
                             std::string(env) + "'");
  return static_cast<int>(value);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw poskit::InputError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

Json load_json(const std::string& path) { return poskit::parse_json_text(read_input(path)); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

poskit::IVec parse_int_list(const std::string& text) {
  poskit::IVec out;
  for (const std::string& part : split_list(text)) {
    const poskit::Rat x = poskit::parse_rational(part);
    if (boost::multiprecision::denominator(x) != 1)
      throw poskit::InputError("expected an integer, got '" + part + "'");
    out.push_back(boost::multiprecision::numerator(x));
  }
  return out;
}

poskit::QVec parse_rational_list(const std::string& text) {
  poskit::QVec out;
  for (const std::string& part : split_list(text)) out.push_back(poskit::parse_rational(part));
  return out;
}

CommandOutput bool_output(bool value, std::string message = "") {
  CommandOutput out;
  out.payload = Json{{"value", value}};
  out.message = std::move(message);
  out.text = value ? "true" : "false";
  return out;
}

CommandOutput rational_output(const char* key, const poskit::Rat& value) {
  CommandOutput out;
  out.payload = Json{{key, poskit::rational_to_json(value)}};
  out.text = poskit::rat_to_string(value);
  return out;
}

CommandOutput report_output(const poskit::ValidationReport& report) {
  CommandOutput out;
  out.payload = Json{{"report", poskit::report_to_json(report)}};
  std::string text = report.pass ? "pass" : "fail";
  for (const poskit::ValidationIssue& issue : report.issues)
    text += "\n  [" + issue.check + "] " + issue.detail;
  out.text = std::move(text);
  return out;
}

CommandOutput document_output(const char* key, Json doc) {
  CommandOutput out;
  out.text = doc.dump(2);
  out.payload = Json{{key, std::move(doc)}};
  return out;
}

// ---- witnesses for false answers --------------------------------------

std::string nef_line_witness(const poskit::VarietyModel& model, const poskit::DivisorClass& l) {
  for (const poskit::CurveRecord& c : model.curves) {
    const poskit::Int deg = poskit::intersect(model, l, c);
    if (deg < 0) return "L . " + c.name + " = " + deg.str() + " < 0";
  }
  return "";
}

std::string nef_toric_witness(const poskit::Fan& fan, const poskit::ToricDivisor& d) {
  for (const poskit::Wall& w : poskit::enumerate_walls(fan)) {
    const poskit::Int deg = poskit::divisor_degree_on_wall(fan, d, w);
    if (deg < 0) return "degree on wall " + poskit::wall_id(w) + " is " + deg.str() + " < 0";
  }
  return "";
}

std::string bundle_degree_witness(const poskit::SplittingData& s, const poskit::Int& bound,
                                  const char* kind) {
  for (const auto& [name, degrees] : s.per_curve)
    for (const poskit::Int& a : degrees)
      if (a < bound)
        return "splitting degree " + a.str() + " on curve '" + name + "' is not " + kind;
  return "";
}

std::string isnef_witness(const poskit::QVec& b, const poskit::Rat& c) {
  if (c < 0) return "degree against a line in the exceptional divisor is c = " +
                    poskit::rat_to_string(c) + " < 0";
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] < c)
      return "degree against the strict transform of C" + std::to_string(j + 1) + " is b_" +
             std::to_string(j + 1) + " - c = " + poskit::rat_to_string(b[j] - c) + " < 0";
  return "";
}

// ---- command wiring ----------------------------------------------------

struct Cli {
  CLI::App app{"poskit: exact nef/ample tests, Seshadri constants, and nef/Mori cones\n"
               "for simple G-variety models and complete smooth toric fans"};
  bool json_mode = false;
  std::function<CommandOutput()> action;

  // Option storage shared by the subcommands.
  std::string file, file_b, model_file, fan_file;
  std::string l_opt, b_opt, c_opt, d_opt, v_opt, curve_opt;
  std::string type_arg;
  int n_arg = 0;
  int cone_index = -1;

  Cli() {
    app.require_subcommand(1);
    app.add_flag("--json", json_mode, "emit a {status, payload, message} JSON envelope");
    add_model_commands();
    add_flag_commands();
    add_toric_commands();
    add_cone_commands();
    add_blowup_commands();
    add_bundle_commands();
    // Let --json appear after the subcommand too.
    for (CLI::App* group : app.get_subcommands({})) {
      group->fallthrough();
      for (CLI::App* sub : group->get_subcommands({})) sub->fallthrough();
    }
  }

  poskit::VarietyModel model_input() const { return poskit::model_from_json(load_json(file)); }
  poskit::Fan fan_input() const { return poskit::fan_from_json(load_json(file)); }
  poskit::DivisorClass divisor_opt() const { return {parse_int_list(l_opt)}; }
  poskit::ToricDivisor toric_divisor_opt() const { return {parse_int_list(d_opt)}; }

  void add_model_commands() {
    CLI::App* model = app.add_subcommand("model", "operations on a variety model JSON");
    model->require_subcommand(1);

    CLI::App* validate = model->add_subcommand("validate", "check the model invariants");
    validate->add_option("file", file, "model JSON (default: stdin)");
    validate->callback([this] {
      action = [this] {
        model_input(); // parse + validate; throws on violation
        CommandOutput out;
        out.payload = Json{{"valid", true}};
        out.text = "pass";
        return out;
      };
    });

    CLI::App* intersect = model->add_subcommand("intersect", "intersection number L . C");
    intersect->add_option("file", file, "model JSON (default: stdin)");
    intersect->add_option("--L", l_opt, "divisor coefficients a1,...,ar")->required();
    intersect->add_option("--curve", curve_opt, "curve name")->required();
    intersect->callback([this] {
      action = [this] {
        const poskit::VarietyModel m = model_input();
        const poskit::Int value =
            poskit::intersect(m, divisor_opt(), poskit::find_curve(m, curve_opt));
        CommandOutput out;
        out.payload = Json{{"value", poskit::to_int64(value)}};
        out.text = value.str();
        return out;
      };
    });

    CLI::App* nef = model->add_subcommand("nef", "nef test for L = sum a_i D_i");
    nef->add_option("file", file, "model JSON (default: stdin)");
    nef->add_option("--L", l_opt, "divisor coefficients a1,...,ar")->required();
    nef->callback([this] {
      action = [this] {
        const poskit::VarietyModel m = model_input();
        const poskit::DivisorClass l = divisor_opt();
        const bool value = poskit::nef_check_linebundle(m, l);
        return bool_output(value, value ? "" : nef_line_witness(m, l));
      };
    });

    CLI::App* ample = model->add_subcommand("ample", "ample test for L = sum a_i D_i");
    ample->add_option("file", file, "model JSON (default: stdin)");
    ample->add_option("--L", l_opt, "divisor coefficients a1,...,ar")->required();
    ample->callback([this] {
      action = [this] {
        const bool value = poskit::ample_check_linebundle(model_input(), divisor_opt());
        return bool_output(value, value ? "" : "some coefficient is < 1");
      };
    });

    CLI::App* seshadri = model->add_subcommand("seshadri", "Seshadri constant of ample L at the sink");
    seshadri->add_option("file", file, "model JSON (default: stdin)");
    seshadri->add_option("--L", l_opt, "divisor coefficients a1,...,ar")->required();
    seshadri->callback([this] {
      action = [this] {
        return rational_output("seshadri", poskit::seshadri_line(model_input(), divisor_opt()));
      };
    });
  }

  void add_flag_commands() {
    CLI::App* flag = app.add_subcommand("flag", "build flag-variety and projective-space models");
    flag->require_subcommand(1);

    CLI::App* build = flag->add_subcommand("build", "model of G/B for a Cartan type");
    build->add_option("type", type_arg, "Cartan type, e.g. A3, B2, g2")->required();
    build->callback([this] {
      action = [this] {
        const poskit::VarietyModel m =
            poskit::build_flag_model(poskit::parse_cartan_type(type_arg));
        return document_output("model", poskit::model_to_json(m));
      };
    });

    CLI::App* proj = flag->add_subcommand("projective", "rank-1 model of P^n");
    proj->add_option("n", n_arg, "dimension n >= 1")->required();
    proj->callback([this] {
      action = [this] {
        const poskit::VarietyModel m = poskit::build_projective_space_model(n_arg);
        return document_output("model", poskit::model_to_json(m));
      };
    });
  }

  void add_toric_commands() {
    CLI::App* toric = app.add_subcommand("toric", "operations on a complete smooth fan JSON");
    toric->require_subcommand(1);

    CLI::App* validate = toric->add_subcommand("validate", "primitivity/smoothness/completeness report");
    validate->add_option("file", file, "fan JSON (default: stdin)");
    validate->callback([this] {
      action = [this] { return report_output(poskit::validate_fan(fan_input())); };
    });

    CLI::App* walls = toric->add_subcommand("walls", "enumerate walls with their relations");
    walls->add_option("file", file, "fan JSON (default: stdin)");
    walls->callback([this] {
      action = [this] {
        return document_output("walls", poskit::walls_to_json(poskit::enumerate_walls(fan_input())));
      };
    });

    CLI::App* nef = toric->add_subcommand("nef", "nef test for D = sum a_rho D_rho");
    nef->add_option("file", file, "fan JSON (default: stdin)");
    nef->add_option("--D", d_opt, "divisor coefficients per ray")->required();
    nef->callback([this] {
      action = [this] {
        const poskit::Fan fan = fan_input();
        const poskit::ToricDivisor d = toric_divisor_opt();
        const bool value = poskit::nef_check_toric(fan, d);
        return bool_output(value, value ? "" : nef_toric_witness(fan, d));
      };
    });

    CLI::App* seshadri = toric->add_subcommand("seshadri", "Seshadri constant of nef D at a fixed point");
    seshadri->add_option("file", file, "fan JSON (default: stdin)");
    seshadri->add_option("--D", d_opt, "divisor coefficients per ray")->required();
    seshadri->add_option("--cone", cone_index, "maximal cone index of the fixed point")->required();
    seshadri->callback([this] {
      action = [this] {
        return rational_output(
            "seshadri", poskit::seshadri_toric_fixed_point(fan_input(), toric_divisor_opt(), cone_index));
      };
    });
  }

  void add_cone_commands() {
    CLI::App* cone = app.add_subcommand("cone", "rational polyhedral cone calculus");
    cone->require_subcommand(1);

    CLI::App* dual = cone->add_subcommand("dual", "generators of the dual cone");
    dual->add_option("file", file, "cone JSON (default: stdin)");
    dual->callback([this] {
      action = [this] {
        const poskit::RationalCone c = poskit::cone_from_json(load_json(file));
        return document_output("cone", poskit::cone_to_json(poskit::dual_cone(c, cone_dim_bound())));
      };
    });

    CLI::App* member = cone->add_subcommand("contains", "membership test");
    member->add_option("file", file, "cone JSON (default: stdin)");
    member->add_option("--v", v_opt, "vector entries, rationals allowed (e.g. 1,3/2,-1)")->required();
    member->callback([this] {
      action = [this] {
        const poskit::RationalCone c = poskit::cone_from_json(load_json(file));
        return bool_output(poskit::contains(c, parse_rational_list(v_opt), cone_dim_bound()));
      };
    });

    CLI::App* equal = cone->add_subcommand("equal", "semantic equality of two cones");
    equal->add_option("a", file, "first cone JSON")->required();
    equal->add_option("b", file_b, "second cone JSON")->required();
    equal->callback([this] {
      action = [this] {
        const poskit::RationalCone a = poskit::cone_from_json(load_json(file));
        const poskit::RationalCone b = poskit::cone_from_json(load_json(file_b));
        return bool_output(poskit::cones_equal(a, b, cone_dim_bound()));
      };
    });
  }

  void add_blowup_commands() {
    CLI::App* blowup = app.add_subcommand("blowup", "blow-up of a model at its sink");
    blowup->require_subcommand(1);

    CLI::App* nefcone = blowup->add_subcommand("nefcone", "nef cone generators (divisor coordinates)");
    nefcone->add_option("file", file, "model JSON (default: stdin)");
    nefcone->callback([this] {
      action = [this] {
        const poskit::BlowupModel bm = poskit::build_blowup(model_input());
        return document_output("cone", poskit::cone_to_json(poskit::blowup_nef_generators(bm)));
      };
    });

    CLI::App* moricone = blowup->add_subcommand("moricone", "Mori cone generators (curve coordinates)");
    moricone->add_option("file", file, "model JSON (default: stdin)");
    moricone->callback([this] {
      action = [this] {
        const poskit::BlowupModel bm = poskit::build_blowup(model_input());
        return document_output("cone", poskit::cone_to_json(poskit::blowup_mori_generators(bm)));
      };
    });

    CLI::App* isnef = blowup->add_subcommand("isnef", "nef test for sum b_i Bl*D_i - c E");
    isnef->add_option("file", file, "model JSON (default: stdin)");
    isnef->add_option("--b", b_opt, "coefficients b1,...,br (rationals allowed)")->required();
    isnef->add_option("--c", c_opt, "coefficient of -E (rational allowed)")->required();
    isnef->callback([this] {
      action = [this] {
        const poskit::BlowupModel bm = poskit::build_blowup(model_input());
        const poskit::QVec b = parse_rational_list(b_opt);
        const poskit::Rat c = poskit::parse_rational(c_opt);
        const bool value = poskit::is_nef_on_blowup(bm, b, c);
        return bool_output(value, value ? "" : isnef_witness(b, c));
      };
    });

    CLI::App* seshadri = blowup->add_subcommand("seshadri", "Seshadri constant of ample L via the blow-up");
    seshadri->add_option("file", file, "model JSON (default: stdin)");
    seshadri->add_option("--L", l_opt, "divisor coefficients a1,...,ar")->required();
    seshadri->callback([this] {
      action = [this] {
        const poskit::BlowupModel bm = poskit::build_blowup(model_input());
        return rational_output("seshadri",
                               poskit::seshadri_via_blowup(bm, divisor_opt(), cone_dim_bound()));
      };
    });
  }

  // Splitting data is the positional file; the underlying model (or fan)
  // comes from --model/--fan, falling back to a model on stdin, so that
  // `flag build A2 | poskit bundle nef s.json` works.
  void add_bundle_commands() {
    CLI::App* bundle = app.add_subcommand("bundle", "vector bundles given by splitting data");
    bundle->require_subcommand(1);

    auto add_common = [this](CLI::App* sub, bool with_cone) {
      sub->add_option("splitting", file_b, "splitting data JSON")->required();
      sub->add_option("--model", model_file, "variety model JSON (default: stdin)");
      sub->add_option("--fan", fan_file, "fan JSON (use the wall ids as curve names)");
      if (with_cone)
        sub->add_option("--cone", cone_index, "maximal cone index (required with --fan)");
    };

    CLI::App* validate = bundle->add_subcommand("validate", "coverage and c1-consistency report");
    add_common(validate, false);
    validate->callback([this] {
      action = [this] {
        const poskit::SplittingData s = poskit::splitting_from_json(load_json(file_b));
        if (!fan_file.empty()) {
          const poskit::Fan fan = poskit::fan_from_json(load_json(fan_file));
          return report_output(poskit::validate_splitting(fan, s));
        }
        const poskit::VarietyModel m = poskit::model_from_json(load_json(model_file));
        return report_output(poskit::validate_splitting(m, s));
      };
    });

    CLI::App* nef = bundle->add_subcommand("nef", "nef test for the bundle");
    add_common(nef, false);
    nef->callback([this] {
      action = [this] {
        const poskit::SplittingData s = poskit::splitting_from_json(load_json(file_b));
        bool value;
        if (!fan_file.empty()) {
          value = poskit::nef_check_bundle(poskit::fan_from_json(load_json(fan_file)), s);
        } else {
          value = poskit::nef_check_bundle(poskit::model_from_json(load_json(model_file)), s);
        }
        return bool_output(value, value ? "" : bundle_degree_witness(s, 0, ">= 0"));
      };
    });

    CLI::App* ample = bundle->add_subcommand("ample", "ample test for the bundle");
    add_common(ample, false);
    ample->callback([this] {
      action = [this] {
        const poskit::SplittingData s = poskit::splitting_from_json(load_json(file_b));
        bool value;
        if (!fan_file.empty()) {
          value = poskit::ample_check_bundle(poskit::fan_from_json(load_json(fan_file)), s);
        } else {
          value = poskit::ample_check_bundle(poskit::model_from_json(load_json(model_file)), s);
        }
        return bool_output(value, value ? "" : bundle_degree_witness(s, 1, ">= 1"));
      };
    });

    CLI::App* seshadri = bundle->add_subcommand("seshadri", "Seshadri constant of a nef bundle");
    add_common(seshadri, true);
    seshadri->callback([this] {
      action = [this] {
        const poskit::SplittingData s = poskit::splitting_from_json(load_json(file_b));
        if (!fan_file.empty()) {
          if (cone_index < 0)
            throw poskit::InputError("--cone is required for Seshadri constants on a fan");
          const poskit::Fan fan = poskit::fan_from_json(load_json(fan_file));
          return rational_output("seshadri", poskit::seshadri_bundle(fan, s, cone_index));
        }
        const poskit::VarietyModel m = poskit::model_from_json(load_json(model_file));
        return rational_output("seshadri", poskit::seshadri_bundle(m, s));
      };
    });
  }
};

int emit(bool json_mode, const std::string& status, const CommandOutput& out, int exit_code) {
  if (json_mode) {
    Json envelope;
    envelope["status"] = status;
    if (!out.payload.is_null()) envelope["payload"] = out.payload;
    envelope["message"] = out.message;
    std::cout << envelope.dump(2) << "\n";
  } else if (exit_code == kExitOk) {
    std::cout << (out.text ? *out.text : out.payload.dump(2)) << "\n";
    if (!out.message.empty()) std::cout << out.message << "\n";
  } else {
    std::cerr << status << ": " << out.message << "\n";
  }
  return exit_code;
}

} // namespace

int main(int argc, char** argv) {
  Cli cli;
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.app.exit(e);
  } catch (const CLI::ParseError& e) {
    CommandOutput out;
    out.message = e.what();
    return emit(cli.json_mode, "input_error", out, kExitInputError);
  }

  try {
    if (!cli.action) throw poskit::InputError("no subcommand given");
    return emit(cli.json_mode, "ok", cli.action(), kExitOk);
  } catch (const poskit::InputError& e) {
    CommandOutput out;
    out.message = e.what();
    return emit(cli.json_mode, "input_error", out, kExitInputError);
  } catch (const poskit::Refusal& e) {
    CommandOutput out;
    out.message = e.what();
    return emit(cli.json_mode, "refused", out, kExitRefused);
  } catch (const std::exception& e) {
    CommandOutput out;
    out.message = e.what();
    return emit(cli.json_mode, "internal_error", out, kExitInternalError);
  }
}

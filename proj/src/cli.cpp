#include "abelian/cli.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelian/group.hpp"
#include "abelian/parse.hpp"
#include "abelian/structure.hpp"
#include "abelian/subgroup.hpp"

namespace abelian::cli {

namespace {

using nlohmann::json;

json element_json(const Element& e) {
  if (e.size() == 1) return e[0];
  return json(e);
}

json elements_json(const std::vector<Element>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back(element_json(e));
  return a;
}

template <typename Range>
std::string join(const Range& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

std::string join_elements(const std::vector<Element>& es) {
  std::string s;
  for (const auto& e : es) {
    if (!s.empty()) s += ' ';
    s += format_element(e);
  }
  return s;
}

/// Text rendering of invariant factors; the trivial group prints as "1".
std::string factors_text(const InvariantFactors& f) {
  return f.empty() ? "1" : join(f);
}

std::string primary_text(const PrimaryDecomposition& d) {
  std::string s;
  for (const auto& [p, exponents] : d)
    for (unsigned b : exponents) {
      if (!s.empty()) s += ' ';
      s += std::to_string(p) + "^" + std::to_string(b);
    }
  return s.empty() ? "1" : s;
}

json primary_json(const PrimaryDecomposition& d) {
  json obj = json::object();
  for (const auto& [p, exponents] : d) obj[std::to_string(p)] = exponents;
  return obj;
}

struct Options {
  bool json_output = false;
  u64 cap = kDefaultElementCap;
};

void emit(std::ostream& out, const Options& opt, const json& data, const std::string& text) {
  if (opt.json_output)
    out << data.dump(2) << '\n';
  else
    out << text;
}

int cmd_show(std::ostream& out, const Options& opt, const std::string& expr, bool want_elements,
             bool want_orders, bool want_identity, bool want_order) {
  const Group g(parse_group_expr(expr), opt.cap);
  if (!want_elements && !want_orders && !want_identity && !want_order) {
    want_elements = true;
    want_identity = true;
    want_order = true;
  }
  json data = json::object();
  std::string text;
  if (want_elements) {
    text += "elements:";
    json a = json::array();
    for (u64 i = 0; i < g.order(); ++i) {
      const Element e = g.element_at(i);
      text += ' ' + format_element(e);
      if (opt.json_output) a.push_back(element_json(e));
    }
    text += '\n';
    data["elements"] = std::move(a);
  }
  if (want_identity) {
    text += "identity: " + format_element(g.identity()) + '\n';
    data["identity"] = element_json(g.identity());
  }
  if (want_order) {
    text += "order: " + std::to_string(g.order()) + '\n';
    data["order"] = g.order();
  }
  if (want_orders) {
    const std::vector<u64> orders = element_orders(g);
    for (u64 i = 0; i < g.order(); ++i)
      text += "Element " + format_element(g.element_at(i)) + " has order " +
              std::to_string(orders[i]) + '\n';
    data["orders"] = orders;
  }
  emit(out, opt, data, text);
  return kOk;
}

int cmd_elem(std::ostream& out, const Options& opt, const std::string& expr,
             const std::string& action, const std::vector<std::string>& operands) {
  const Group g(parse_group_expr(expr), opt.cap);
  auto need = [&](std::size_t n, const char* what) {
    if (operands.size() != n)
      throw parse_error(0, std::string(what) + " (got " + std::to_string(operands.size()) +
                               " operand(s))");
  };
  json data = json::object();
  std::string text;
  if (action == "inv") {
    need(1, "one element operand");
    const Element r = g.inverse(parse_element(g, operands[0]));
    text = format_element(r) + '\n';
    data["result"] = element_json(r);
  } else if (action == "op") {
    need(2, "two element operands");
    const Element r = g.op(parse_element(g, operands[0]), parse_element(g, operands[1]));
    text = format_element(r) + '\n';
    data["result"] = element_json(r);
  } else if (action == "pow") {
    need(2, "an element and an exponent");
    const Element r = g.pow(parse_element(g, operands[0]), parse_u64(operands[1], "an exponent"));
    text = format_element(r) + '\n';
    data["result"] = element_json(r);
  } else if (action == "order") {
    need(1, "one element operand");
    const u64 k = g.element_order(parse_element(g, operands[0]));
    text = std::to_string(k) + '\n';
    data["order"] = k;
  } else if (action == "cycle") {
    need(1, "one element operand");
    const std::vector<Element> c = cycle(g, parse_element(g, operands[0]));
    text = join_elements(c) + '\n';
    data["cycle"] = elements_json(c);
  } else {
    throw parse_error(0, "an action: inv, op, pow, order or cycle");
  }
  emit(out, opt, data, text);
  return kOk;
}

int cmd_subgroup(std::ostream& out, const Options& opt, const std::string& expr,
                 const std::string& generators, bool want_orders) {
  const Group g(parse_group_expr(expr), opt.cap);
  const Group sub = generate(g, parse_element_list(g, generators));
  json data = json::object();
  std::string text = "carrier: " + join_elements(sub.carrier()) + '\n';
  text += "order: " + std::to_string(sub.order()) + '\n';
  data["carrier"] = elements_json(sub.carrier());
  data["order"] = sub.order();
  if (want_orders) {
    const std::vector<u64> orders = element_orders(sub);
    for (u64 i = 0; i < sub.order(); ++i)
      text += "Element " + format_element(sub.element_at(i)) + " has order " +
              std::to_string(orders[i]) + '\n';
    data["orders"] = orders;
  }
  emit(out, opt, data, text);
  return kOk;
}

int cmd_classify(std::ostream& out, const Options& opt, const std::string& expr) {
  const Group g(parse_group_expr(expr), opt.cap);
  const OrderMultiset orders = order_multiset(g);
  const PrimaryDecomposition primary = primary_decomposition(orders);
  const InvariantFactors factors = invariant_factors_of(orders);

  std::string text = "order: " + std::to_string(g.order()) + '\n';
  text += "orders: " + join(orders) + '\n';
  text += "primary: " + primary_text(primary) + '\n';
  text += "invariant_factors: " + factors_text(factors) + '\n';
  json data = json::object();
  data["order"] = g.order();
  data["orders"] = orders;
  data["primary"] = primary_json(primary);
  data["invariant_factors"] = factors;
  emit(out, opt, data, text);
  return kOk;
}

int cmd_iso(std::ostream& out, const Options& opt, const std::string& left_expr,
            const std::string& right_expr) {
  const Group g(parse_group_expr(left_expr), opt.cap);
  const Group h(parse_group_expr(right_expr), opt.cap);
  const IsoResult r = is_isomorphic(g, h);

  std::string text = "left orders: " + join(r.left_orders) + '\n';
  text += "right orders: " + join(r.right_orders) + '\n';
  text += "left invariant_factors: " + factors_text(r.left_factors) + '\n';
  text += "right invariant_factors: " + factors_text(r.right_factors) + '\n';
  text += std::string("isomorphic: ") + (r.isomorphic ? "yes" : "no") + '\n';
  json data = json::object();
  data["left"] = {{"orders", r.left_orders}, {"invariant_factors", r.left_factors}};
  data["right"] = {{"orders", r.right_orders}, {"invariant_factors", r.right_factors}};
  data["isomorphic"] = r.isomorphic;
  emit(out, opt, data, text);
  return r.isomorphic ? kOk : kNotIsomorphic;
}

int cmd_candidates(std::ostream& out, const Options& opt, const std::string& order_text) {
  const u64 n = parse_u64(order_text, "a group order");
  if (n == 0) throw std::domain_error("no group has order 0");
  const std::vector<InvariantFactors> classes = abelian_groups_of_order(n);

  std::string text;
  json list = json::array();
  for (const auto& c : classes) {
    text += factors_text(c) + '\n';
    list.push_back(c);
  }
  text += "count: " + std::to_string(classes.size()) + '\n';
  json data = json::object();
  data["order"] = n;
  data["count"] = classes.size();
  data["classes"] = std::move(list);
  emit(out, opt, data, text);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite abelian group toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json_output, "emit machine-readable JSON instead of text");
  app.add_option("--cap", opt.cap, "maximum number of group elements")->capture_default_str();

  std::string expr, expr2, action, generators, order_text;
  std::string operand_a, operand_b;
  bool f_elements = false, f_orders = false, f_identity = false, f_order = false;

  auto* show = app.add_subcommand("show", "print group elements, identity, order");
  show->fallthrough();
  show->add_option("group", expr, "group expression, e.g. add:10 or add:5xmult:9")->required();
  show->add_flag("--elements", f_elements, "list the elements");
  show->add_flag("--orders", f_orders, "list the order of every element");
  show->add_flag("--identity", f_identity, "print the identity");
  show->add_flag("--order", f_order, "print the group order");

  auto* elem = app.add_subcommand("elem", "per-element operations");
  elem->fallthrough();
  elem->add_option("group", expr, "group expression")->required();
  elem->add_option("action", action, "inv | op | pow | order | cycle")->required();
  auto* elem_a = elem->add_option("a", operand_a, "element operand");
  auto* elem_b = elem->add_option("b", operand_b, "second element (op) or exponent (pow)");

  auto* subgroup = app.add_subcommand("subgroup", "generate the subgroup spanned by elements");
  subgroup->fallthrough();
  subgroup->add_option("group", expr, "group expression")->required();
  subgroup
      ->add_option("generators", generators,
                   "comma-separated generators; bracket tuples, e.g. [0,2],[3,5]")
      ->required();
  subgroup->add_flag("--orders", f_orders, "list the order of every carrier element");

  auto* classify = app.add_subcommand("classify", "order multiset and canonical decomposition");
  classify->fallthrough();
  classify->add_option("group", expr, "group expression")->required();

  auto* iso = app.add_subcommand("iso", "decide whether two groups are isomorphic");
  iso->fallthrough();
  iso->add_option("left", expr, "group expression")->required();
  iso->add_option("right", expr2, "group expression")->required();

  auto* candidates = app.add_subcommand("candidates", "all abelian groups of a given order");
  candidates->fallthrough();
  candidates->add_option("order", order_text, "group order")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (show->parsed()) return cmd_show(out, opt, expr, f_elements, f_orders, f_identity, f_order);
    if (elem->parsed()) {
      std::vector<std::string> operands;
      if (elem_a->count() > 0) operands.push_back(operand_a);
      if (elem_b->count() > 0) operands.push_back(operand_b);
      return cmd_elem(out, opt, expr, action, operands);
    }
    if (subgroup->parsed()) return cmd_subgroup(out, opt, expr, generators, f_orders);
    if (classify->parsed()) return cmd_classify(out, opt, expr);
    if (iso->parsed()) return cmd_iso(out, opt, expr, expr2);
    if (candidates->parsed()) return cmd_candidates(out, opt, order_text);
  } catch (const parse_error& e) {
    err << e.what() << '\n';
    return kParseError;
  } catch (const membership_error& e) {
    err << "membership error: " << e.what() << '\n';
    return kMembershipError;
  } catch (const cap_error& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace abelian::cli

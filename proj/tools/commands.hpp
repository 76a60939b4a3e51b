#pragma once

#include <string>
#include <vector>

namespace swbtool {

// Exit codes shared by every subcommand: 0 success / property holds,
// 1 violation or FAIL verdict found, 2 usage, parse, or format error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

int cmd_validate(const std::string& path);
int cmd_label(const std::string& path);
int cmd_labelings(const std::string& path, bool list);
int cmd_amalgamate(const std::string& base, const std::string& left,
                   const std::string& right);
int cmd_free_amalgam(const std::string& base, const std::string& left,
                     const std::string& right);
int cmd_witness(const std::string& dir, int x, const std::string& edge,
                const std::string& path);
int cmd_height(const std::string& edges_path, const std::string& poset_path);
int cmd_eval(const std::string& formula, const std::string& obj,
             const std::string& param, const std::string& path);
int cmd_gen(int n, std::uint64_t seed, double density);
int cmd_sequence(const std::string& spec_path, int length, bool check,
                 const std::string& out_path);
int cmd_two_stage(const std::string& spec_path, int k1, int k2);
int cmd_ap_failure(int max_n, const std::string& verify_path);
int cmd_check();

} // namespace swbtool

#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace bullcol {

/// Named induced patterns the engine can detect and report.
enum class PatternKind { bull, claw, chair, e, s113, s123, c5, p5, p6, k4, c7_complement };

std::string_view pattern_name(PatternKind kind);
std::optional<PatternKind> pattern_from_name(std::string_view name);

/// The graph class an input is claimed to belong to.
enum class ClassMode { bull_chair, bull_e, bull_c5_s113, bull_c5_s123 };

std::string_view class_mode_name(ClassMode mode);
std::optional<ClassMode> class_mode_from_name(std::string_view name);

/// Forbidden induced patterns defining the class.
std::span<const PatternKind> forbidden_patterns(ClassMode mode);

} // namespace bullcol

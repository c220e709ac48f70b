#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "catcoh/category.hpp"
#include "catcoh/module.hpp"

namespace catcoh {

// Line-based text formats; grammars are documented in docs/formats.md.

/// Parsed .fcat body (also used for categories nested inside .ffun files).
struct CategoryFile {
    enum class Kind { Explicit, Poset, Group };

    struct Object {
        std::string name;
        std::string identity;
    };
    struct MorphismDecl {
        std::string name;
        std::string src;
        std::string dst;
    };
    struct Compose {
        std::string g;
        std::string f;
        std::string result;
    };

    int version = 1;
    Kind kind = Kind::Explicit;
    std::vector<Object> objects;
    std::vector<MorphismDecl> morphisms;
    std::vector<Compose> compositions;
    std::vector<std::string> elements;                        // poset / group
    std::vector<std::pair<std::string, std::string>> leq;     // poset
    std::vector<std::array<std::string, 3>> mul;              // group: a * b = c
};

CategoryFile parse_category_file(std::string_view text);
std::string serialize_category_file(const CategoryFile& file);
/// Expands builders; throws ParseError / InputError on missing data. The
/// result is not checked against the axioms.
CategoryPtr build_category_unchecked(const CategoryFile& file);
/// Parse + build + validate_category; axiom violations raise InputError.
CategoryPtr parse_category(std::string_view text);
/// Explicit-form file listing every composite with no identity factor.
CategoryFile category_to_file(const FiniteCategory& C);
std::string serialize_category(const FiniteCategory& C);

/// Which category a module file lives over, relative to a given category C.
enum class ModuleBase { Category, Opposite, Factorization };

struct ModuleFile {
    int version = 1;
    Ring ring;
    ModuleBase over = ModuleBase::Category;
    std::vector<std::pair<std::string, int>> ranks;
    struct MapDecl {
        std::string morphism;
        std::vector<std::vector<mpq_class>> rows;
        int line = 0;  // source position for diagnostics (0 when built in code)
    };
    std::vector<int> rank_lines;
    std::vector<MapDecl> maps;
};

ModuleFile parse_module_file(std::string_view text);
std::string serialize_module_file(const ModuleFile& file);
/// Shape-checked module over `base` (functoriality is left to check_functoriality).
Module build_module(const ModuleFile& file, const CategoryPtr& base);
Module parse_module(std::string_view text, const CategoryPtr& base);
ModuleFile module_to_file(const Module& M, ModuleBase over = ModuleBase::Category);

struct FunctorFile {
    struct Mapping {
        std::vector<std::pair<std::string, std::string>> objects;
        std::vector<std::pair<std::string, std::string>> morphisms;
    };
    enum class Kind { Functor, Diagram };

    int version = 1;
    Kind kind = Kind::Functor;
    // functor
    CategoryFile source;
    CategoryFile target;
    Mapping mapping;
    // diagram
    CategoryFile base;
    std::vector<std::pair<std::string, CategoryFile>> fibers;
    std::vector<std::pair<std::string, Mapping>> actions;
};

FunctorFile parse_functor_file(std::string_view text);
std::string serialize_functor_file(const FunctorFile& file);
/// Builds and validates; throws InputError.
Functor build_functor(const FunctorFile& file);
FunctorToCatPtr build_diagram(const FunctorFile& file);

std::string read_text_file(const std::string& path);

}  // namespace catcoh

// Generated by scripts/gen_unicode_tables.py -- do not edit.
// Canonical decomposition/composition data for Latin text with
// combining diacritics (Vietnamese repertoire and Western Latin).
#pragma once

#include <cstdint>

namespace cxrval::detail {

struct decomp_entry { char32_t cp; char32_t seq[3]; std::uint8_t len; };
inline constexpr decomp_entry decomposition_table[] = {
    {0x00C0, {0x0041, 0x0300, 0x0000}, 2},
    {0x00C1, {0x0041, 0x0301, 0x0000}, 2},
    {0x00C2, {0x0041, 0x0302, 0x0000}, 2},
    {0x00C3, {0x0041, 0x0303, 0x0000}, 2},
    {0x00C4, {0x0041, 0x0308, 0x0000}, 2},
    {0x00C5, {0x0041, 0x030A, 0x0000}, 2},
    {0x00C7, {0x0043, 0x0327, 0x0000}, 2},
    {0x00C8, {0x0045, 0x0300, 0x0000}, 2},
    {0x00C9, {0x0045, 0x0301, 0x0000}, 2},
    {0x00CA, {0x0045, 0x0302, 0x0000}, 2},
    {0x00CB, {0x0045, 0x0308, 0x0000}, 2},
    {0x00CC, {0x0049, 0x0300, 0x0000}, 2},
    {0x00CD, {0x0049, 0x0301, 0x0000}, 2},
    {0x00CE, {0x0049, 0x0302, 0x0000}, 2},
    {0x00CF, {0x0049, 0x0308, 0x0000}, 2},
    {0x00D1, {0x004E, 0x0303, 0x0000}, 2},
    {0x00D2, {0x004F, 0x0300, 0x0000}, 2},
    {0x00D3, {0x004F, 0x0301, 0x0000}, 2},
    {0x00D4, {0x004F, 0x0302, 0x0000}, 2},
    {0x00D5, {0x004F, 0x0303, 0x0000}, 2},
    {0x00D6, {0x004F, 0x0308, 0x0000}, 2},
    {0x00D9, {0x0055, 0x0300, 0x0000}, 2},
    {0x00DA, {0x0055, 0x0301, 0x0000}, 2},
    {0x00DB, {0x0055, 0x0302, 0x0000}, 2},
    {0x00DC, {0x0055, 0x0308, 0x0000}, 2},
    {0x00DD, {0x0059, 0x0301, 0x0000}, 2},
    {0x00E0, {0x0061, 0x0300, 0x0000}, 2},
    {0x00E1, {0x0061, 0x0301, 0x0000}, 2},
    {0x00E2, {0x0061, 0x0302, 0x0000}, 2},
    {0x00E3, {0x0061, 0x0303, 0x0000}, 2},
    {0x00E4, {0x0061, 0x0308, 0x0000}, 2},
    {0x00E5, {0x0061, 0x030A, 0x0000}, 2},
    {0x00E7, {0x0063, 0x0327, 0x0000}, 2},
    {0x00E8, {0x0065, 0x0300, 0x0000}, 2},
    {0x00E9, {0x0065, 0x0301, 0x0000}, 2},
    {0x00EA, {0x0065, 0x0302, 0x0000}, 2},
    {0x00EB, {0x0065, 0x0308, 0x0000}, 2},
    {0x00EC, {0x0069, 0x0300, 0x0000}, 2},
    {0x00ED, {0x0069, 0x0301, 0x0000}, 2},
    {0x00EE, {0x0069, 0x0302, 0x0000}, 2},
    {0x00EF, {0x0069, 0x0308, 0x0000}, 2},
    {0x00F1, {0x006E, 0x0303, 0x0000}, 2},
    {0x00F2, {0x006F, 0x0300, 0x0000}, 2},
    {0x00F3, {0x006F, 0x0301, 0x0000}, 2},
    {0x00F4, {0x006F, 0x0302, 0x0000}, 2},
    {0x00F5, {0x006F, 0x0303, 0x0000}, 2},
    {0x00F6, {0x006F, 0x0308, 0x0000}, 2},
    {0x00F9, {0x0075, 0x0300, 0x0000}, 2},
    {0x00FA, {0x0075, 0x0301, 0x0000}, 2},
    {0x00FB, {0x0075, 0x0302, 0x0000}, 2},
    {0x00FC, {0x0075, 0x0308, 0x0000}, 2},
    {0x00FD, {0x0079, 0x0301, 0x0000}, 2},
    {0x00FF, {0x0079, 0x0308, 0x0000}, 2},
    {0x0100, {0x0041, 0x0304, 0x0000}, 2},
    {0x0101, {0x0061, 0x0304, 0x0000}, 2},
    {0x0102, {0x0041, 0x0306, 0x0000}, 2},
    {0x0103, {0x0061, 0x0306, 0x0000}, 2},
    {0x0104, {0x0041, 0x0328, 0x0000}, 2},
    {0x0105, {0x0061, 0x0328, 0x0000}, 2},
    {0x0106, {0x0043, 0x0301, 0x0000}, 2},
    {0x0107, {0x0063, 0x0301, 0x0000}, 2},
    {0x0108, {0x0043, 0x0302, 0x0000}, 2},
    {0x0109, {0x0063, 0x0302, 0x0000}, 2},
    {0x010A, {0x0043, 0x0307, 0x0000}, 2},
    {0x010B, {0x0063, 0x0307, 0x0000}, 2},
    {0x010C, {0x0043, 0x030C, 0x0000}, 2},
    {0x010D, {0x0063, 0x030C, 0x0000}, 2},
    {0x010E, {0x0044, 0x030C, 0x0000}, 2},
    {0x010F, {0x0064, 0x030C, 0x0000}, 2},
    {0x0112, {0x0045, 0x0304, 0x0000}, 2},
    {0x0113, {0x0065, 0x0304, 0x0000}, 2},
    {0x0114, {0x0045, 0x0306, 0x0000}, 2},
    {0x0115, {0x0065, 0x0306, 0x0000}, 2},
    {0x0116, {0x0045, 0x0307, 0x0000}, 2},
    {0x0117, {0x0065, 0x0307, 0x0000}, 2},
    {0x0118, {0x0045, 0x0328, 0x0000}, 2},
    {0x0119, {0x0065, 0x0328, 0x0000}, 2},
    {0x011A, {0x0045, 0x030C, 0x0000}, 2},
    {0x011B, {0x0065, 0x030C, 0x0000}, 2},
    {0x011C, {0x0047, 0x0302, 0x0000}, 2},
    {0x011D, {0x0067, 0x0302, 0x0000}, 2},
    {0x011E, {0x0047, 0x0306, 0x0000}, 2},
    {0x011F, {0x0067, 0x0306, 0x0000}, 2},
    {0x0120, {0x0047, 0x0307, 0x0000}, 2},
    {0x0121, {0x0067, 0x0307, 0x0000}, 2},
    {0x0122, {0x0047, 0x0327, 0x0000}, 2},
    {0x0123, {0x0067, 0x0327, 0x0000}, 2},
    {0x0124, {0x0048, 0x0302, 0x0000}, 2},
    {0x0125, {0x0068, 0x0302, 0x0000}, 2},
    {0x0128, {0x0049, 0x0303, 0x0000}, 2},
    {0x0129, {0x0069, 0x0303, 0x0000}, 2},
    {0x012A, {0x0049, 0x0304, 0x0000}, 2},
    {0x012B, {0x0069, 0x0304, 0x0000}, 2},
    {0x012C, {0x0049, 0x0306, 0x0000}, 2},
    {0x012D, {0x0069, 0x0306, 0x0000}, 2},
    {0x012E, {0x0049, 0x0328, 0x0000}, 2},
    {0x012F, {0x0069, 0x0328, 0x0000}, 2},
    {0x0130, {0x0049, 0x0307, 0x0000}, 2},
    {0x0134, {0x004A, 0x0302, 0x0000}, 2},
    {0x0135, {0x006A, 0x0302, 0x0000}, 2},
    {0x0136, {0x004B, 0x0327, 0x0000}, 2},
    {0x0137, {0x006B, 0x0327, 0x0000}, 2},
    {0x0139, {0x004C, 0x0301, 0x0000}, 2},
    {0x013A, {0x006C, 0x0301, 0x0000}, 2},
    {0x013B, {0x004C, 0x0327, 0x0000}, 2},
    {0x013C, {0x006C, 0x0327, 0x0000}, 2},
    {0x013D, {0x004C, 0x030C, 0x0000}, 2},
    {0x013E, {0x006C, 0x030C, 0x0000}, 2},
    {0x0143, {0x004E, 0x0301, 0x0000}, 2},
    {0x0144, {0x006E, 0x0301, 0x0000}, 2},
    {0x0145, {0x004E, 0x0327, 0x0000}, 2},
    {0x0146, {0x006E, 0x0327, 0x0000}, 2},
    {0x0147, {0x004E, 0x030C, 0x0000}, 2},
    {0x0148, {0x006E, 0x030C, 0x0000}, 2},
    {0x014C, {0x004F, 0x0304, 0x0000}, 2},
    {0x014D, {0x006F, 0x0304, 0x0000}, 2},
    {0x014E, {0x004F, 0x0306, 0x0000}, 2},
    {0x014F, {0x006F, 0x0306, 0x0000}, 2},
    {0x0150, {0x004F, 0x030B, 0x0000}, 2},
    {0x0151, {0x006F, 0x030B, 0x0000}, 2},
    {0x0154, {0x0052, 0x0301, 0x0000}, 2},
    {0x0155, {0x0072, 0x0301, 0x0000}, 2},
    {0x0156, {0x0052, 0x0327, 0x0000}, 2},
    {0x0157, {0x0072, 0x0327, 0x0000}, 2},
    {0x0158, {0x0052, 0x030C, 0x0000}, 2},
    {0x0159, {0x0072, 0x030C, 0x0000}, 2},
    {0x015A, {0x0053, 0x0301, 0x0000}, 2},
    {0x015B, {0x0073, 0x0301, 0x0000}, 2},
    {0x015C, {0x0053, 0x0302, 0x0000}, 2},
    {0x015D, {0x0073, 0x0302, 0x0000}, 2},
    {0x015E, {0x0053, 0x0327, 0x0000}, 2},
    {0x015F, {0x0073, 0x0327, 0x0000}, 2},
    {0x0160, {0x0053, 0x030C, 0x0000}, 2},
    {0x0161, {0x0073, 0x030C, 0x0000}, 2},
    {0x0162, {0x0054, 0x0327, 0x0000}, 2},
    {0x0163, {0x0074, 0x0327, 0x0000}, 2},
    {0x0164, {0x0054, 0x030C, 0x0000}, 2},
    {0x0165, {0x0074, 0x030C, 0x0000}, 2},
    {0x0168, {0x0055, 0x0303, 0x0000}, 2},
    {0x0169, {0x0075, 0x0303, 0x0000}, 2},
    {0x016A, {0x0055, 0x0304, 0x0000}, 2},
    {0x016B, {0x0075, 0x0304, 0x0000}, 2},
    {0x016C, {0x0055, 0x0306, 0x0000}, 2},
    {0x016D, {0x0075, 0x0306, 0x0000}, 2},
    {0x016E, {0x0055, 0x030A, 0x0000}, 2},
    {0x016F, {0x0075, 0x030A, 0x0000}, 2},
    {0x0170, {0x0055, 0x030B, 0x0000}, 2},
    {0x0171, {0x0075, 0x030B, 0x0000}, 2},
    {0x0172, {0x0055, 0x0328, 0x0000}, 2},
    {0x0173, {0x0075, 0x0328, 0x0000}, 2},
    {0x0174, {0x0057, 0x0302, 0x0000}, 2},
    {0x0175, {0x0077, 0x0302, 0x0000}, 2},
    {0x0176, {0x0059, 0x0302, 0x0000}, 2},
    {0x0177, {0x0079, 0x0302, 0x0000}, 2},
    {0x0178, {0x0059, 0x0308, 0x0000}, 2},
    {0x0179, {0x005A, 0x0301, 0x0000}, 2},
    {0x017A, {0x007A, 0x0301, 0x0000}, 2},
    {0x017B, {0x005A, 0x0307, 0x0000}, 2},
    {0x017C, {0x007A, 0x0307, 0x0000}, 2},
    {0x017D, {0x005A, 0x030C, 0x0000}, 2},
    {0x017E, {0x007A, 0x030C, 0x0000}, 2},
    {0x01A0, {0x004F, 0x031B, 0x0000}, 2},
    {0x01A1, {0x006F, 0x031B, 0x0000}, 2},
    {0x01AF, {0x0055, 0x031B, 0x0000}, 2},
    {0x01B0, {0x0075, 0x031B, 0x0000}, 2},
    {0x01CD, {0x0041, 0x030C, 0x0000}, 2},
    {0x01CE, {0x0061, 0x030C, 0x0000}, 2},
    {0x01CF, {0x0049, 0x030C, 0x0000}, 2},
    {0x01D0, {0x0069, 0x030C, 0x0000}, 2},
    {0x01D1, {0x004F, 0x030C, 0x0000}, 2},
    {0x01D2, {0x006F, 0x030C, 0x0000}, 2},
    {0x01D3, {0x0055, 0x030C, 0x0000}, 2},
    {0x01D4, {0x0075, 0x030C, 0x0000}, 2},
    {0x01D5, {0x0055, 0x0308, 0x0304}, 3},
    {0x01D6, {0x0075, 0x0308, 0x0304}, 3},
    {0x01D7, {0x0055, 0x0308, 0x0301}, 3},
    {0x01D8, {0x0075, 0x0308, 0x0301}, 3},
    {0x01D9, {0x0055, 0x0308, 0x030C}, 3},
    {0x01DA, {0x0075, 0x0308, 0x030C}, 3},
    {0x01DB, {0x0055, 0x0308, 0x0300}, 3},
    {0x01DC, {0x0075, 0x0308, 0x0300}, 3},
    {0x01DE, {0x0041, 0x0308, 0x0304}, 3},
    {0x01DF, {0x0061, 0x0308, 0x0304}, 3},
    {0x01E0, {0x0041, 0x0307, 0x0304}, 3},
    {0x01E1, {0x0061, 0x0307, 0x0304}, 3},
    {0x01E2, {0x00C6, 0x0304, 0x0000}, 2},
    {0x01E3, {0x00E6, 0x0304, 0x0000}, 2},
    {0x01E6, {0x0047, 0x030C, 0x0000}, 2},
    {0x01E7, {0x0067, 0x030C, 0x0000}, 2},
    {0x01E8, {0x004B, 0x030C, 0x0000}, 2},
    {0x01E9, {0x006B, 0x030C, 0x0000}, 2},
    {0x01EA, {0x004F, 0x0328, 0x0000}, 2},
    {0x01EB, {0x006F, 0x0328, 0x0000}, 2},
    {0x01EC, {0x004F, 0x0328, 0x0304}, 3},
    {0x01ED, {0x006F, 0x0328, 0x0304}, 3},
    {0x01EE, {0x01B7, 0x030C, 0x0000}, 2},
    {0x01EF, {0x0292, 0x030C, 0x0000}, 2},
    {0x01F0, {0x006A, 0x030C, 0x0000}, 2},
    {0x01F4, {0x0047, 0x0301, 0x0000}, 2},
    {0x01F5, {0x0067, 0x0301, 0x0000}, 2},
    {0x01F8, {0x004E, 0x0300, 0x0000}, 2},
    {0x01F9, {0x006E, 0x0300, 0x0000}, 2},
    {0x01FA, {0x0041, 0x030A, 0x0301}, 3},
    {0x01FB, {0x0061, 0x030A, 0x0301}, 3},
    {0x01FC, {0x00C6, 0x0301, 0x0000}, 2},
    {0x01FD, {0x00E6, 0x0301, 0x0000}, 2},
    {0x01FE, {0x00D8, 0x0301, 0x0000}, 2},
    {0x01FF, {0x00F8, 0x0301, 0x0000}, 2},
    {0x0200, {0x0041, 0x030F, 0x0000}, 2},
    {0x0201, {0x0061, 0x030F, 0x0000}, 2},
    {0x0202, {0x0041, 0x0311, 0x0000}, 2},
    {0x0203, {0x0061, 0x0311, 0x0000}, 2},
    {0x0204, {0x0045, 0x030F, 0x0000}, 2},
    {0x0205, {0x0065, 0x030F, 0x0000}, 2},
    {0x0206, {0x0045, 0x0311, 0x0000}, 2},
    {0x0207, {0x0065, 0x0311, 0x0000}, 2},
    {0x0208, {0x0049, 0x030F, 0x0000}, 2},
    {0x0209, {0x0069, 0x030F, 0x0000}, 2},
    {0x020A, {0x0049, 0x0311, 0x0000}, 2},
    {0x020B, {0x0069, 0x0311, 0x0000}, 2},
    {0x020C, {0x004F, 0x030F, 0x0000}, 2},
    {0x020D, {0x006F, 0x030F, 0x0000}, 2},
    {0x020E, {0x004F, 0x0311, 0x0000}, 2},
    {0x020F, {0x006F, 0x0311, 0x0000}, 2},
    {0x0210, {0x0052, 0x030F, 0x0000}, 2},
    {0x0211, {0x0072, 0x030F, 0x0000}, 2},
    {0x0212, {0x0052, 0x0311, 0x0000}, 2},
    {0x0213, {0x0072, 0x0311, 0x0000}, 2},
    {0x0214, {0x0055, 0x030F, 0x0000}, 2},
    {0x0215, {0x0075, 0x030F, 0x0000}, 2},
    {0x0216, {0x0055, 0x0311, 0x0000}, 2},
    {0x0217, {0x0075, 0x0311, 0x0000}, 2},
    {0x0218, {0x0053, 0x0326, 0x0000}, 2},
    {0x0219, {0x0073, 0x0326, 0x0000}, 2},
    {0x021A, {0x0054, 0x0326, 0x0000}, 2},
    {0x021B, {0x0074, 0x0326, 0x0000}, 2},
    {0x021E, {0x0048, 0x030C, 0x0000}, 2},
    {0x021F, {0x0068, 0x030C, 0x0000}, 2},
    {0x0226, {0x0041, 0x0307, 0x0000}, 2},
    {0x0227, {0x0061, 0x0307, 0x0000}, 2},
    {0x0228, {0x0045, 0x0327, 0x0000}, 2},
    {0x0229, {0x0065, 0x0327, 0x0000}, 2},
    {0x022A, {0x004F, 0x0308, 0x0304}, 3},
    {0x022B, {0x006F, 0x0308, 0x0304}, 3},
    {0x022C, {0x004F, 0x0303, 0x0304}, 3},
    {0x022D, {0x006F, 0x0303, 0x0304}, 3},
    {0x022E, {0x004F, 0x0307, 0x0000}, 2},
    {0x022F, {0x006F, 0x0307, 0x0000}, 2},
    {0x0230, {0x004F, 0x0307, 0x0304}, 3},
    {0x0231, {0x006F, 0x0307, 0x0304}, 3},
    {0x0232, {0x0059, 0x0304, 0x0000}, 2},
    {0x0233, {0x0079, 0x0304, 0x0000}, 2},
    {0x1E00, {0x0041, 0x0325, 0x0000}, 2},
    {0x1E01, {0x0061, 0x0325, 0x0000}, 2},
    {0x1E02, {0x0042, 0x0307, 0x0000}, 2},
    {0x1E03, {0x0062, 0x0307, 0x0000}, 2},
    {0x1E04, {0x0042, 0x0323, 0x0000}, 2},
    {0x1E05, {0x0062, 0x0323, 0x0000}, 2},
    {0x1E06, {0x0042, 0x0331, 0x0000}, 2},
    {0x1E07, {0x0062, 0x0331, 0x0000}, 2},
    {0x1E08, {0x0043, 0x0327, 0x0301}, 3},
    {0x1E09, {0x0063, 0x0327, 0x0301}, 3},
    {0x1E0A, {0x0044, 0x0307, 0x0000}, 2},
    {0x1E0B, {0x0064, 0x0307, 0x0000}, 2},
    {0x1E0C, {0x0044, 0x0323, 0x0000}, 2},
    {0x1E0D, {0x0064, 0x0323, 0x0000}, 2},
    {0x1E0E, {0x0044, 0x0331, 0x0000}, 2},
    {0x1E0F, {0x0064, 0x0331, 0x0000}, 2},
    {0x1E10, {0x0044, 0x0327, 0x0000}, 2},
    {0x1E11, {0x0064, 0x0327, 0x0000}, 2},
    {0x1E12, {0x0044, 0x032D, 0x0000}, 2},
    {0x1E13, {0x0064, 0x032D, 0x0000}, 2},
    {0x1E14, {0x0045, 0x0304, 0x0300}, 3},
    {0x1E15, {0x0065, 0x0304, 0x0300}, 3},
    {0x1E16, {0x0045, 0x0304, 0x0301}, 3},
    {0x1E17, {0x0065, 0x0304, 0x0301}, 3},
    {0x1E18, {0x0045, 0x032D, 0x0000}, 2},
    {0x1E19, {0x0065, 0x032D, 0x0000}, 2},
    {0x1E1A, {0x0045, 0x0330, 0x0000}, 2},
    {0x1E1B, {0x0065, 0x0330, 0x0000}, 2},
    {0x1E1C, {0x0045, 0x0327, 0x0306}, 3},
    {0x1E1D, {0x0065, 0x0327, 0x0306}, 3},
    {0x1E1E, {0x0046, 0x0307, 0x0000}, 2},
    {0x1E1F, {0x0066, 0x0307, 0x0000}, 2},
    {0x1E20, {0x0047, 0x0304, 0x0000}, 2},
    {0x1E21, {0x0067, 0x0304, 0x0000}, 2},
    {0x1E22, {0x0048, 0x0307, 0x0000}, 2},
    {0x1E23, {0x0068, 0x0307, 0x0000}, 2},
    {0x1E24, {0x0048, 0x0323, 0x0000}, 2},
    {0x1E25, {0x0068, 0x0323, 0x0000}, 2},
    {0x1E26, {0x0048, 0x0308, 0x0000}, 2},
    {0x1E27, {0x0068, 0x0308, 0x0000}, 2},
    {0x1E28, {0x0048, 0x0327, 0x0000}, 2},
    {0x1E29, {0x0068, 0x0327, 0x0000}, 2},
    {0x1E2A, {0x0048, 0x032E, 0x0000}, 2},
    {0x1E2B, {0x0068, 0x032E, 0x0000}, 2},
    {0x1E2C, {0x0049, 0x0330, 0x0000}, 2},
    {0x1E2D, {0x0069, 0x0330, 0x0000}, 2},
    {0x1E2E, {0x0049, 0x0308, 0x0301}, 3},
    {0x1E2F, {0x0069, 0x0308, 0x0301}, 3},
    {0x1E30, {0x004B, 0x0301, 0x0000}, 2},
    {0x1E31, {0x006B, 0x0301, 0x0000}, 2},
    {0x1E32, {0x004B, 0x0323, 0x0000}, 2},
    {0x1E33, {0x006B, 0x0323, 0x0000}, 2},
    {0x1E34, {0x004B, 0x0331, 0x0000}, 2},
    {0x1E35, {0x006B, 0x0331, 0x0000}, 2},
    {0x1E36, {0x004C, 0x0323, 0x0000}, 2},
    {0x1E37, {0x006C, 0x0323, 0x0000}, 2},
    {0x1E38, {0x004C, 0x0323, 0x0304}, 3},
    {0x1E39, {0x006C, 0x0323, 0x0304}, 3},
    {0x1E3A, {0x004C, 0x0331, 0x0000}, 2},
    {0x1E3B, {0x006C, 0x0331, 0x0000}, 2},
    {0x1E3C, {0x004C, 0x032D, 0x0000}, 2},
    {0x1E3D, {0x006C, 0x032D, 0x0000}, 2},
    {0x1E3E, {0x004D, 0x0301, 0x0000}, 2},
    {0x1E3F, {0x006D, 0x0301, 0x0000}, 2},
    {0x1E40, {0x004D, 0x0307, 0x0000}, 2},
    {0x1E41, {0x006D, 0x0307, 0x0000}, 2},
    {0x1E42, {0x004D, 0x0323, 0x0000}, 2},
    {0x1E43, {0x006D, 0x0323, 0x0000}, 2},
    {0x1E44, {0x004E, 0x0307, 0x0000}, 2},
    {0x1E45, {0x006E, 0x0307, 0x0000}, 2},
    {0x1E46, {0x004E, 0x0323, 0x0000}, 2},
    {0x1E47, {0x006E, 0x0323, 0x0000}, 2},
    {0x1E48, {0x004E, 0x0331, 0x0000}, 2},
    {0x1E49, {0x006E, 0x0331, 0x0000}, 2},
    {0x1E4A, {0x004E, 0x032D, 0x0000}, 2},
    {0x1E4B, {0x006E, 0x032D, 0x0000}, 2},
    {0x1E4C, {0x004F, 0x0303, 0x0301}, 3},
    {0x1E4D, {0x006F, 0x0303, 0x0301}, 3},
    {0x1E4E, {0x004F, 0x0303, 0x0308}, 3},
    {0x1E4F, {0x006F, 0x0303, 0x0308}, 3},
    {0x1E50, {0x004F, 0x0304, 0x0300}, 3},
    {0x1E51, {0x006F, 0x0304, 0x0300}, 3},
    {0x1E52, {0x004F, 0x0304, 0x0301}, 3},
    {0x1E53, {0x006F, 0x0304, 0x0301}, 3},
    {0x1E54, {0x0050, 0x0301, 0x0000}, 2},
    {0x1E55, {0x0070, 0x0301, 0x0000}, 2},
    {0x1E56, {0x0050, 0x0307, 0x0000}, 2},
    {0x1E57, {0x0070, 0x0307, 0x0000}, 2},
    {0x1E58, {0x0052, 0x0307, 0x0000}, 2},
    {0x1E59, {0x0072, 0x0307, 0x0000}, 2},
    {0x1E5A, {0x0052, 0x0323, 0x0000}, 2},
    {0x1E5B, {0x0072, 0x0323, 0x0000}, 2},
    {0x1E5C, {0x0052, 0x0323, 0x0304}, 3},
    {0x1E5D, {0x0072, 0x0323, 0x0304}, 3},
    {0x1E5E, {0x0052, 0x0331, 0x0000}, 2},
    {0x1E5F, {0x0072, 0x0331, 0x0000}, 2},
    {0x1E60, {0x0053, 0x0307, 0x0000}, 2},
    {0x1E61, {0x0073, 0x0307, 0x0000}, 2},
    {0x1E62, {0x0053, 0x0323, 0x0000}, 2},
    {0x1E63, {0x0073, 0x0323, 0x0000}, 2},
    {0x1E64, {0x0053, 0x0301, 0x0307}, 3},
    {0x1E65, {0x0073, 0x0301, 0x0307}, 3},
    {0x1E66, {0x0053, 0x030C, 0x0307}, 3},
    {0x1E67, {0x0073, 0x030C, 0x0307}, 3},
    {0x1E68, {0x0053, 0x0323, 0x0307}, 3},
    {0x1E69, {0x0073, 0x0323, 0x0307}, 3},
    {0x1E6A, {0x0054, 0x0307, 0x0000}, 2},
    {0x1E6B, {0x0074, 0x0307, 0x0000}, 2},
    {0x1E6C, {0x0054, 0x0323, 0x0000}, 2},
    {0x1E6D, {0x0074, 0x0323, 0x0000}, 2},
    {0x1E6E, {0x0054, 0x0331, 0x0000}, 2},
    {0x1E6F, {0x0074, 0x0331, 0x0000}, 2},
    {0x1E70, {0x0054, 0x032D, 0x0000}, 2},
    {0x1E71, {0x0074, 0x032D, 0x0000}, 2},
    {0x1E72, {0x0055, 0x0324, 0x0000}, 2},
    {0x1E73, {0x0075, 0x0324, 0x0000}, 2},
    {0x1E74, {0x0055, 0x0330, 0x0000}, 2},
    {0x1E75, {0x0075, 0x0330, 0x0000}, 2},
    {0x1E76, {0x0055, 0x032D, 0x0000}, 2},
    {0x1E77, {0x0075, 0x032D, 0x0000}, 2},
    {0x1E78, {0x0055, 0x0303, 0x0301}, 3},
    {0x1E79, {0x0075, 0x0303, 0x0301}, 3},
    {0x1E7A, {0x0055, 0x0304, 0x0308}, 3},
    {0x1E7B, {0x0075, 0x0304, 0x0308}, 3},
    {0x1E7C, {0x0056, 0x0303, 0x0000}, 2},
    {0x1E7D, {0x0076, 0x0303, 0x0000}, 2},
    {0x1E7E, {0x0056, 0x0323, 0x0000}, 2},
    {0x1E7F, {0x0076, 0x0323, 0x0000}, 2},
    {0x1E80, {0x0057, 0x0300, 0x0000}, 2},
    {0x1E81, {0x0077, 0x0300, 0x0000}, 2},
    {0x1E82, {0x0057, 0x0301, 0x0000}, 2},
    {0x1E83, {0x0077, 0x0301, 0x0000}, 2},
    {0x1E84, {0x0057, 0x0308, 0x0000}, 2},
    {0x1E85, {0x0077, 0x0308, 0x0000}, 2},
    {0x1E86, {0x0057, 0x0307, 0x0000}, 2},
    {0x1E87, {0x0077, 0x0307, 0x0000}, 2},
    {0x1E88, {0x0057, 0x0323, 0x0000}, 2},
    {0x1E89, {0x0077, 0x0323, 0x0000}, 2},
    {0x1E8A, {0x0058, 0x0307, 0x0000}, 2},
    {0x1E8B, {0x0078, 0x0307, 0x0000}, 2},
    {0x1E8C, {0x0058, 0x0308, 0x0000}, 2},
    {0x1E8D, {0x0078, 0x0308, 0x0000}, 2},
    {0x1E8E, {0x0059, 0x0307, 0x0000}, 2},
    {0x1E8F, {0x0079, 0x0307, 0x0000}, 2},
    {0x1E90, {0x005A, 0x0302, 0x0000}, 2},
    {0x1E91, {0x007A, 0x0302, 0x0000}, 2},
    {0x1E92, {0x005A, 0x0323, 0x0000}, 2},
    {0x1E93, {0x007A, 0x0323, 0x0000}, 2},
    {0x1E94, {0x005A, 0x0331, 0x0000}, 2},
    {0x1E95, {0x007A, 0x0331, 0x0000}, 2},
    {0x1E96, {0x0068, 0x0331, 0x0000}, 2},
    {0x1E97, {0x0074, 0x0308, 0x0000}, 2},
    {0x1E98, {0x0077, 0x030A, 0x0000}, 2},
    {0x1E99, {0x0079, 0x030A, 0x0000}, 2},
    {0x1E9B, {0x017F, 0x0307, 0x0000}, 2},
    {0x1EA0, {0x0041, 0x0323, 0x0000}, 2},
    {0x1EA1, {0x0061, 0x0323, 0x0000}, 2},
    {0x1EA2, {0x0041, 0x0309, 0x0000}, 2},
    {0x1EA3, {0x0061, 0x0309, 0x0000}, 2},
    {0x1EA4, {0x0041, 0x0302, 0x0301}, 3},
    {0x1EA5, {0x0061, 0x0302, 0x0301}, 3},
    {0x1EA6, {0x0041, 0x0302, 0x0300}, 3},
    {0x1EA7, {0x0061, 0x0302, 0x0300}, 3},
    {0x1EA8, {0x0041, 0x0302, 0x0309}, 3},
    {0x1EA9, {0x0061, 0x0302, 0x0309}, 3},
    {0x1EAA, {0x0041, 0x0302, 0x0303}, 3},
    {0x1EAB, {0x0061, 0x0302, 0x0303}, 3},
    {0x1EAC, {0x0041, 0x0323, 0x0302}, 3},
    {0x1EAD, {0x0061, 0x0323, 0x0302}, 3},
    {0x1EAE, {0x0041, 0x0306, 0x0301}, 3},
    {0x1EAF, {0x0061, 0x0306, 0x0301}, 3},
    {0x1EB0, {0x0041, 0x0306, 0x0300}, 3},
    {0x1EB1, {0x0061, 0x0306, 0x0300}, 3},
    {0x1EB2, {0x0041, 0x0306, 0x0309}, 3},
    {0x1EB3, {0x0061, 0x0306, 0x0309}, 3},
    {0x1EB4, {0x0041, 0x0306, 0x0303}, 3},
    {0x1EB5, {0x0061, 0x0306, 0x0303}, 3},
    {0x1EB6, {0x0041, 0x0323, 0x0306}, 3},
    {0x1EB7, {0x0061, 0x0323, 0x0306}, 3},
    {0x1EB8, {0x0045, 0x0323, 0x0000}, 2},
    {0x1EB9, {0x0065, 0x0323, 0x0000}, 2},
    {0x1EBA, {0x0045, 0x0309, 0x0000}, 2},
    {0x1EBB, {0x0065, 0x0309, 0x0000}, 2},
    {0x1EBC, {0x0045, 0x0303, 0x0000}, 2},
    {0x1EBD, {0x0065, 0x0303, 0x0000}, 2},
    {0x1EBE, {0x0045, 0x0302, 0x0301}, 3},
    {0x1EBF, {0x0065, 0x0302, 0x0301}, 3},
    {0x1EC0, {0x0045, 0x0302, 0x0300}, 3},
    {0x1EC1, {0x0065, 0x0302, 0x0300}, 3},
    {0x1EC2, {0x0045, 0x0302, 0x0309}, 3},
    {0x1EC3, {0x0065, 0x0302, 0x0309}, 3},
    {0x1EC4, {0x0045, 0x0302, 0x0303}, 3},
    {0x1EC5, {0x0065, 0x0302, 0x0303}, 3},
    {0x1EC6, {0x0045, 0x0323, 0x0302}, 3},
    {0x1EC7, {0x0065, 0x0323, 0x0302}, 3},
    {0x1EC8, {0x0049, 0x0309, 0x0000}, 2},
    {0x1EC9, {0x0069, 0x0309, 0x0000}, 2},
    {0x1ECA, {0x0049, 0x0323, 0x0000}, 2},
    {0x1ECB, {0x0069, 0x0323, 0x0000}, 2},
    {0x1ECC, {0x004F, 0x0323, 0x0000}, 2},
    {0x1ECD, {0x006F, 0x0323, 0x0000}, 2},
    {0x1ECE, {0x004F, 0x0309, 0x0000}, 2},
    {0x1ECF, {0x006F, 0x0309, 0x0000}, 2},
    {0x1ED0, {0x004F, 0x0302, 0x0301}, 3},
    {0x1ED1, {0x006F, 0x0302, 0x0301}, 3},
    {0x1ED2, {0x004F, 0x0302, 0x0300}, 3},
    {0x1ED3, {0x006F, 0x0302, 0x0300}, 3},
    {0x1ED4, {0x004F, 0x0302, 0x0309}, 3},
    {0x1ED5, {0x006F, 0x0302, 0x0309}, 3},
    {0x1ED6, {0x004F, 0x0302, 0x0303}, 3},
    {0x1ED7, {0x006F, 0x0302, 0x0303}, 3},
    {0x1ED8, {0x004F, 0x0323, 0x0302}, 3},
    {0x1ED9, {0x006F, 0x0323, 0x0302}, 3},
    {0x1EDA, {0x004F, 0x031B, 0x0301}, 3},
    {0x1EDB, {0x006F, 0x031B, 0x0301}, 3},
    {0x1EDC, {0x004F, 0x031B, 0x0300}, 3},
    {0x1EDD, {0x006F, 0x031B, 0x0300}, 3},
    {0x1EDE, {0x004F, 0x031B, 0x0309}, 3},
    {0x1EDF, {0x006F, 0x031B, 0x0309}, 3},
    {0x1EE0, {0x004F, 0x031B, 0x0303}, 3},
    {0x1EE1, {0x006F, 0x031B, 0x0303}, 3},
    {0x1EE2, {0x004F, 0x031B, 0x0323}, 3},
    {0x1EE3, {0x006F, 0x031B, 0x0323}, 3},
    {0x1EE4, {0x0055, 0x0323, 0x0000}, 2},
    {0x1EE5, {0x0075, 0x0323, 0x0000}, 2},
    {0x1EE6, {0x0055, 0x0309, 0x0000}, 2},
    {0x1EE7, {0x0075, 0x0309, 0x0000}, 2},
    {0x1EE8, {0x0055, 0x031B, 0x0301}, 3},
    {0x1EE9, {0x0075, 0x031B, 0x0301}, 3},
    {0x1EEA, {0x0055, 0x031B, 0x0300}, 3},
    {0x1EEB, {0x0075, 0x031B, 0x0300}, 3},
    {0x1EEC, {0x0055, 0x031B, 0x0309}, 3},
    {0x1EED, {0x0075, 0x031B, 0x0309}, 3},
    {0x1EEE, {0x0055, 0x031B, 0x0303}, 3},
    {0x1EEF, {0x0075, 0x031B, 0x0303}, 3},
    {0x1EF0, {0x0055, 0x031B, 0x0323}, 3},
    {0x1EF1, {0x0075, 0x031B, 0x0323}, 3},
    {0x1EF2, {0x0059, 0x0300, 0x0000}, 2},
    {0x1EF3, {0x0079, 0x0300, 0x0000}, 2},
    {0x1EF4, {0x0059, 0x0323, 0x0000}, 2},
    {0x1EF5, {0x0079, 0x0323, 0x0000}, 2},
    {0x1EF6, {0x0059, 0x0309, 0x0000}, 2},
    {0x1EF7, {0x0079, 0x0309, 0x0000}, 2},
    {0x1EF8, {0x0059, 0x0303, 0x0000}, 2},
    {0x1EF9, {0x0079, 0x0303, 0x0000}, 2},
};

struct comp_entry { std::uint64_t key; char32_t composed; };
inline constexpr comp_entry composition_table[] = {
    {0x00008200300, 0x00C0},  // U+0041 + U+0300
    {0x00008200301, 0x00C1},  // U+0041 + U+0301
    {0x00008200302, 0x00C2},  // U+0041 + U+0302
    {0x00008200303, 0x00C3},  // U+0041 + U+0303
    {0x00008200304, 0x0100},  // U+0041 + U+0304
    {0x00008200306, 0x0102},  // U+0041 + U+0306
    {0x00008200307, 0x0226},  // U+0041 + U+0307
    {0x00008200308, 0x00C4},  // U+0041 + U+0308
    {0x00008200309, 0x1EA2},  // U+0041 + U+0309
    {0x0000820030A, 0x00C5},  // U+0041 + U+030A
    {0x0000820030C, 0x01CD},  // U+0041 + U+030C
    {0x0000820030F, 0x0200},  // U+0041 + U+030F
    {0x00008200311, 0x0202},  // U+0041 + U+0311
    {0x00008200323, 0x1EA0},  // U+0041 + U+0323
    {0x00008200325, 0x1E00},  // U+0041 + U+0325
    {0x00008200328, 0x0104},  // U+0041 + U+0328
    {0x00008400307, 0x1E02},  // U+0042 + U+0307
    {0x00008400323, 0x1E04},  // U+0042 + U+0323
    {0x00008400331, 0x1E06},  // U+0042 + U+0331
    {0x00008600301, 0x0106},  // U+0043 + U+0301
    {0x00008600302, 0x0108},  // U+0043 + U+0302
    {0x00008600307, 0x010A},  // U+0043 + U+0307
    {0x0000860030C, 0x010C},  // U+0043 + U+030C
    {0x00008600327, 0x00C7},  // U+0043 + U+0327
    {0x00008800307, 0x1E0A},  // U+0044 + U+0307
    {0x0000880030C, 0x010E},  // U+0044 + U+030C
    {0x00008800323, 0x1E0C},  // U+0044 + U+0323
    {0x00008800327, 0x1E10},  // U+0044 + U+0327
    {0x0000880032D, 0x1E12},  // U+0044 + U+032D
    {0x00008800331, 0x1E0E},  // U+0044 + U+0331
    {0x00008A00300, 0x00C8},  // U+0045 + U+0300
    {0x00008A00301, 0x00C9},  // U+0045 + U+0301
    {0x00008A00302, 0x00CA},  // U+0045 + U+0302
    {0x00008A00303, 0x1EBC},  // U+0045 + U+0303
    {0x00008A00304, 0x0112},  // U+0045 + U+0304
    {0x00008A00306, 0x0114},  // U+0045 + U+0306
    {0x00008A00307, 0x0116},  // U+0045 + U+0307
    {0x00008A00308, 0x00CB},  // U+0045 + U+0308
    {0x00008A00309, 0x1EBA},  // U+0045 + U+0309
    {0x00008A0030C, 0x011A},  // U+0045 + U+030C
    {0x00008A0030F, 0x0204},  // U+0045 + U+030F
    {0x00008A00311, 0x0206},  // U+0045 + U+0311
    {0x00008A00323, 0x1EB8},  // U+0045 + U+0323
    {0x00008A00327, 0x0228},  // U+0045 + U+0327
    {0x00008A00328, 0x0118},  // U+0045 + U+0328
    {0x00008A0032D, 0x1E18},  // U+0045 + U+032D
    {0x00008A00330, 0x1E1A},  // U+0045 + U+0330
    {0x00008C00307, 0x1E1E},  // U+0046 + U+0307
    {0x00008E00301, 0x01F4},  // U+0047 + U+0301
    {0x00008E00302, 0x011C},  // U+0047 + U+0302
    {0x00008E00304, 0x1E20},  // U+0047 + U+0304
    {0x00008E00306, 0x011E},  // U+0047 + U+0306
    {0x00008E00307, 0x0120},  // U+0047 + U+0307
    {0x00008E0030C, 0x01E6},  // U+0047 + U+030C
    {0x00008E00327, 0x0122},  // U+0047 + U+0327
    {0x00009000302, 0x0124},  // U+0048 + U+0302
    {0x00009000307, 0x1E22},  // U+0048 + U+0307
    {0x00009000308, 0x1E26},  // U+0048 + U+0308
    {0x0000900030C, 0x021E},  // U+0048 + U+030C
    {0x00009000323, 0x1E24},  // U+0048 + U+0323
    {0x00009000327, 0x1E28},  // U+0048 + U+0327
    {0x0000900032E, 0x1E2A},  // U+0048 + U+032E
    {0x00009200300, 0x00CC},  // U+0049 + U+0300
    {0x00009200301, 0x00CD},  // U+0049 + U+0301
    {0x00009200302, 0x00CE},  // U+0049 + U+0302
    {0x00009200303, 0x0128},  // U+0049 + U+0303
    {0x00009200304, 0x012A},  // U+0049 + U+0304
    {0x00009200306, 0x012C},  // U+0049 + U+0306
    {0x00009200307, 0x0130},  // U+0049 + U+0307
    {0x00009200308, 0x00CF},  // U+0049 + U+0308
    {0x00009200309, 0x1EC8},  // U+0049 + U+0309
    {0x0000920030C, 0x01CF},  // U+0049 + U+030C
    {0x0000920030F, 0x0208},  // U+0049 + U+030F
    {0x00009200311, 0x020A},  // U+0049 + U+0311
    {0x00009200323, 0x1ECA},  // U+0049 + U+0323
    {0x00009200328, 0x012E},  // U+0049 + U+0328
    {0x00009200330, 0x1E2C},  // U+0049 + U+0330
    {0x00009400302, 0x0134},  // U+004A + U+0302
    {0x00009600301, 0x1E30},  // U+004B + U+0301
    {0x0000960030C, 0x01E8},  // U+004B + U+030C
    {0x00009600323, 0x1E32},  // U+004B + U+0323
    {0x00009600327, 0x0136},  // U+004B + U+0327
    {0x00009600331, 0x1E34},  // U+004B + U+0331
    {0x00009800301, 0x0139},  // U+004C + U+0301
    {0x0000980030C, 0x013D},  // U+004C + U+030C
    {0x00009800323, 0x1E36},  // U+004C + U+0323
    {0x00009800327, 0x013B},  // U+004C + U+0327
    {0x0000980032D, 0x1E3C},  // U+004C + U+032D
    {0x00009800331, 0x1E3A},  // U+004C + U+0331
    {0x00009A00301, 0x1E3E},  // U+004D + U+0301
    {0x00009A00307, 0x1E40},  // U+004D + U+0307
    {0x00009A00323, 0x1E42},  // U+004D + U+0323
    {0x00009C00300, 0x01F8},  // U+004E + U+0300
    {0x00009C00301, 0x0143},  // U+004E + U+0301
    {0x00009C00303, 0x00D1},  // U+004E + U+0303
    {0x00009C00307, 0x1E44},  // U+004E + U+0307
    {0x00009C0030C, 0x0147},  // U+004E + U+030C
    {0x00009C00323, 0x1E46},  // U+004E + U+0323
    {0x00009C00327, 0x0145},  // U+004E + U+0327
    {0x00009C0032D, 0x1E4A},  // U+004E + U+032D
    {0x00009C00331, 0x1E48},  // U+004E + U+0331
    {0x00009E00300, 0x00D2},  // U+004F + U+0300
    {0x00009E00301, 0x00D3},  // U+004F + U+0301
    {0x00009E00302, 0x00D4},  // U+004F + U+0302
    {0x00009E00303, 0x00D5},  // U+004F + U+0303
    {0x00009E00304, 0x014C},  // U+004F + U+0304
    {0x00009E00306, 0x014E},  // U+004F + U+0306
    {0x00009E00307, 0x022E},  // U+004F + U+0307
    {0x00009E00308, 0x00D6},  // U+004F + U+0308
    {0x00009E00309, 0x1ECE},  // U+004F + U+0309
    {0x00009E0030B, 0x0150},  // U+004F + U+030B
    {0x00009E0030C, 0x01D1},  // U+004F + U+030C
    {0x00009E0030F, 0x020C},  // U+004F + U+030F
    {0x00009E00311, 0x020E},  // U+004F + U+0311
    {0x00009E0031B, 0x01A0},  // U+004F + U+031B
    {0x00009E00323, 0x1ECC},  // U+004F + U+0323
    {0x00009E00328, 0x01EA},  // U+004F + U+0328
    {0x0000A000301, 0x1E54},  // U+0050 + U+0301
    {0x0000A000307, 0x1E56},  // U+0050 + U+0307
    {0x0000A400301, 0x0154},  // U+0052 + U+0301
    {0x0000A400307, 0x1E58},  // U+0052 + U+0307
    {0x0000A40030C, 0x0158},  // U+0052 + U+030C
    {0x0000A40030F, 0x0210},  // U+0052 + U+030F
    {0x0000A400311, 0x0212},  // U+0052 + U+0311
    {0x0000A400323, 0x1E5A},  // U+0052 + U+0323
    {0x0000A400327, 0x0156},  // U+0052 + U+0327
    {0x0000A400331, 0x1E5E},  // U+0052 + U+0331
    {0x0000A600301, 0x015A},  // U+0053 + U+0301
    {0x0000A600302, 0x015C},  // U+0053 + U+0302
    {0x0000A600307, 0x1E60},  // U+0053 + U+0307
    {0x0000A60030C, 0x0160},  // U+0053 + U+030C
    {0x0000A600323, 0x1E62},  // U+0053 + U+0323
    {0x0000A600326, 0x0218},  // U+0053 + U+0326
    {0x0000A600327, 0x015E},  // U+0053 + U+0327
    {0x0000A800307, 0x1E6A},  // U+0054 + U+0307
    {0x0000A80030C, 0x0164},  // U+0054 + U+030C
    {0x0000A800323, 0x1E6C},  // U+0054 + U+0323
    {0x0000A800326, 0x021A},  // U+0054 + U+0326
    {0x0000A800327, 0x0162},  // U+0054 + U+0327
    {0x0000A80032D, 0x1E70},  // U+0054 + U+032D
    {0x0000A800331, 0x1E6E},  // U+0054 + U+0331
    {0x0000AA00300, 0x00D9},  // U+0055 + U+0300
    {0x0000AA00301, 0x00DA},  // U+0055 + U+0301
    {0x0000AA00302, 0x00DB},  // U+0055 + U+0302
    {0x0000AA00303, 0x0168},  // U+0055 + U+0303
    {0x0000AA00304, 0x016A},  // U+0055 + U+0304
    {0x0000AA00306, 0x016C},  // U+0055 + U+0306
    {0x0000AA00308, 0x00DC},  // U+0055 + U+0308
    {0x0000AA00309, 0x1EE6},  // U+0055 + U+0309
    {0x0000AA0030A, 0x016E},  // U+0055 + U+030A
    {0x0000AA0030B, 0x0170},  // U+0055 + U+030B
    {0x0000AA0030C, 0x01D3},  // U+0055 + U+030C
    {0x0000AA0030F, 0x0214},  // U+0055 + U+030F
    {0x0000AA00311, 0x0216},  // U+0055 + U+0311
    {0x0000AA0031B, 0x01AF},  // U+0055 + U+031B
    {0x0000AA00323, 0x1EE4},  // U+0055 + U+0323
    {0x0000AA00324, 0x1E72},  // U+0055 + U+0324
    {0x0000AA00328, 0x0172},  // U+0055 + U+0328
    {0x0000AA0032D, 0x1E76},  // U+0055 + U+032D
    {0x0000AA00330, 0x1E74},  // U+0055 + U+0330
    {0x0000AC00303, 0x1E7C},  // U+0056 + U+0303
    {0x0000AC00323, 0x1E7E},  // U+0056 + U+0323
    {0x0000AE00300, 0x1E80},  // U+0057 + U+0300
    {0x0000AE00301, 0x1E82},  // U+0057 + U+0301
    {0x0000AE00302, 0x0174},  // U+0057 + U+0302
    {0x0000AE00307, 0x1E86},  // U+0057 + U+0307
    {0x0000AE00308, 0x1E84},  // U+0057 + U+0308
    {0x0000AE00323, 0x1E88},  // U+0057 + U+0323
    {0x0000B000307, 0x1E8A},  // U+0058 + U+0307
    {0x0000B000308, 0x1E8C},  // U+0058 + U+0308
    {0x0000B200300, 0x1EF2},  // U+0059 + U+0300
    {0x0000B200301, 0x00DD},  // U+0059 + U+0301
    {0x0000B200302, 0x0176},  // U+0059 + U+0302
    {0x0000B200303, 0x1EF8},  // U+0059 + U+0303
    {0x0000B200304, 0x0232},  // U+0059 + U+0304
    {0x0000B200307, 0x1E8E},  // U+0059 + U+0307
    {0x0000B200308, 0x0178},  // U+0059 + U+0308
    {0x0000B200309, 0x1EF6},  // U+0059 + U+0309
    {0x0000B200323, 0x1EF4},  // U+0059 + U+0323
    {0x0000B400301, 0x0179},  // U+005A + U+0301
    {0x0000B400302, 0x1E90},  // U+005A + U+0302
    {0x0000B400307, 0x017B},  // U+005A + U+0307
    {0x0000B40030C, 0x017D},  // U+005A + U+030C
    {0x0000B400323, 0x1E92},  // U+005A + U+0323
    {0x0000B400331, 0x1E94},  // U+005A + U+0331
    {0x0000C200300, 0x00E0},  // U+0061 + U+0300
    {0x0000C200301, 0x00E1},  // U+0061 + U+0301
    {0x0000C200302, 0x00E2},  // U+0061 + U+0302
    {0x0000C200303, 0x00E3},  // U+0061 + U+0303
    {0x0000C200304, 0x0101},  // U+0061 + U+0304
    {0x0000C200306, 0x0103},  // U+0061 + U+0306
    {0x0000C200307, 0x0227},  // U+0061 + U+0307
    {0x0000C200308, 0x00E4},  // U+0061 + U+0308
    {0x0000C200309, 0x1EA3},  // U+0061 + U+0309
    {0x0000C20030A, 0x00E5},  // U+0061 + U+030A
    {0x0000C20030C, 0x01CE},  // U+0061 + U+030C
    {0x0000C20030F, 0x0201},  // U+0061 + U+030F
    {0x0000C200311, 0x0203},  // U+0061 + U+0311
    {0x0000C200323, 0x1EA1},  // U+0061 + U+0323
    {0x0000C200325, 0x1E01},  // U+0061 + U+0325
    {0x0000C200328, 0x0105},  // U+0061 + U+0328
    {0x0000C400307, 0x1E03},  // U+0062 + U+0307
    {0x0000C400323, 0x1E05},  // U+0062 + U+0323
    {0x0000C400331, 0x1E07},  // U+0062 + U+0331
    {0x0000C600301, 0x0107},  // U+0063 + U+0301
    {0x0000C600302, 0x0109},  // U+0063 + U+0302
    {0x0000C600307, 0x010B},  // U+0063 + U+0307
    {0x0000C60030C, 0x010D},  // U+0063 + U+030C
    {0x0000C600327, 0x00E7},  // U+0063 + U+0327
    {0x0000C800307, 0x1E0B},  // U+0064 + U+0307
    {0x0000C80030C, 0x010F},  // U+0064 + U+030C
    {0x0000C800323, 0x1E0D},  // U+0064 + U+0323
    {0x0000C800327, 0x1E11},  // U+0064 + U+0327
    {0x0000C80032D, 0x1E13},  // U+0064 + U+032D
    {0x0000C800331, 0x1E0F},  // U+0064 + U+0331
    {0x0000CA00300, 0x00E8},  // U+0065 + U+0300
    {0x0000CA00301, 0x00E9},  // U+0065 + U+0301
    {0x0000CA00302, 0x00EA},  // U+0065 + U+0302
    {0x0000CA00303, 0x1EBD},  // U+0065 + U+0303
    {0x0000CA00304, 0x0113},  // U+0065 + U+0304
    {0x0000CA00306, 0x0115},  // U+0065 + U+0306
    {0x0000CA00307, 0x0117},  // U+0065 + U+0307
    {0x0000CA00308, 0x00EB},  // U+0065 + U+0308
    {0x0000CA00309, 0x1EBB},  // U+0065 + U+0309
    {0x0000CA0030C, 0x011B},  // U+0065 + U+030C
    {0x0000CA0030F, 0x0205},  // U+0065 + U+030F
    {0x0000CA00311, 0x0207},  // U+0065 + U+0311
    {0x0000CA00323, 0x1EB9},  // U+0065 + U+0323
    {0x0000CA00327, 0x0229},  // U+0065 + U+0327
    {0x0000CA00328, 0x0119},  // U+0065 + U+0328
    {0x0000CA0032D, 0x1E19},  // U+0065 + U+032D
    {0x0000CA00330, 0x1E1B},  // U+0065 + U+0330
    {0x0000CC00307, 0x1E1F},  // U+0066 + U+0307
    {0x0000CE00301, 0x01F5},  // U+0067 + U+0301
    {0x0000CE00302, 0x011D},  // U+0067 + U+0302
    {0x0000CE00304, 0x1E21},  // U+0067 + U+0304
    {0x0000CE00306, 0x011F},  // U+0067 + U+0306
    {0x0000CE00307, 0x0121},  // U+0067 + U+0307
    {0x0000CE0030C, 0x01E7},  // U+0067 + U+030C
    {0x0000CE00327, 0x0123},  // U+0067 + U+0327
    {0x0000D000302, 0x0125},  // U+0068 + U+0302
    {0x0000D000307, 0x1E23},  // U+0068 + U+0307
    {0x0000D000308, 0x1E27},  // U+0068 + U+0308
    {0x0000D00030C, 0x021F},  // U+0068 + U+030C
    {0x0000D000323, 0x1E25},  // U+0068 + U+0323
    {0x0000D000327, 0x1E29},  // U+0068 + U+0327
    {0x0000D00032E, 0x1E2B},  // U+0068 + U+032E
    {0x0000D000331, 0x1E96},  // U+0068 + U+0331
    {0x0000D200300, 0x00EC},  // U+0069 + U+0300
    {0x0000D200301, 0x00ED},  // U+0069 + U+0301
    {0x0000D200302, 0x00EE},  // U+0069 + U+0302
    {0x0000D200303, 0x0129},  // U+0069 + U+0303
    {0x0000D200304, 0x012B},  // U+0069 + U+0304
    {0x0000D200306, 0x012D},  // U+0069 + U+0306
    {0x0000D200308, 0x00EF},  // U+0069 + U+0308
    {0x0000D200309, 0x1EC9},  // U+0069 + U+0309
    {0x0000D20030C, 0x01D0},  // U+0069 + U+030C
    {0x0000D20030F, 0x0209},  // U+0069 + U+030F
    {0x0000D200311, 0x020B},  // U+0069 + U+0311
    {0x0000D200323, 0x1ECB},  // U+0069 + U+0323
    {0x0000D200328, 0x012F},  // U+0069 + U+0328
    {0x0000D200330, 0x1E2D},  // U+0069 + U+0330
    {0x0000D400302, 0x0135},  // U+006A + U+0302
    {0x0000D40030C, 0x01F0},  // U+006A + U+030C
    {0x0000D600301, 0x1E31},  // U+006B + U+0301
    {0x0000D60030C, 0x01E9},  // U+006B + U+030C
    {0x0000D600323, 0x1E33},  // U+006B + U+0323
    {0x0000D600327, 0x0137},  // U+006B + U+0327
    {0x0000D600331, 0x1E35},  // U+006B + U+0331
    {0x0000D800301, 0x013A},  // U+006C + U+0301
    {0x0000D80030C, 0x013E},  // U+006C + U+030C
    {0x0000D800323, 0x1E37},  // U+006C + U+0323
    {0x0000D800327, 0x013C},  // U+006C + U+0327
    {0x0000D80032D, 0x1E3D},  // U+006C + U+032D
    {0x0000D800331, 0x1E3B},  // U+006C + U+0331
    {0x0000DA00301, 0x1E3F},  // U+006D + U+0301
    {0x0000DA00307, 0x1E41},  // U+006D + U+0307
    {0x0000DA00323, 0x1E43},  // U+006D + U+0323
    {0x0000DC00300, 0x01F9},  // U+006E + U+0300
    {0x0000DC00301, 0x0144},  // U+006E + U+0301
    {0x0000DC00303, 0x00F1},  // U+006E + U+0303
    {0x0000DC00307, 0x1E45},  // U+006E + U+0307
    {0x0000DC0030C, 0x0148},  // U+006E + U+030C
    {0x0000DC00323, 0x1E47},  // U+006E + U+0323
    {0x0000DC00327, 0x0146},  // U+006E + U+0327
    {0x0000DC0032D, 0x1E4B},  // U+006E + U+032D
    {0x0000DC00331, 0x1E49},  // U+006E + U+0331
    {0x0000DE00300, 0x00F2},  // U+006F + U+0300
    {0x0000DE00301, 0x00F3},  // U+006F + U+0301
    {0x0000DE00302, 0x00F4},  // U+006F + U+0302
    {0x0000DE00303, 0x00F5},  // U+006F + U+0303
    {0x0000DE00304, 0x014D},  // U+006F + U+0304
    {0x0000DE00306, 0x014F},  // U+006F + U+0306
    {0x0000DE00307, 0x022F},  // U+006F + U+0307
    {0x0000DE00308, 0x00F6},  // U+006F + U+0308
    {0x0000DE00309, 0x1ECF},  // U+006F + U+0309
    {0x0000DE0030B, 0x0151},  // U+006F + U+030B
    {0x0000DE0030C, 0x01D2},  // U+006F + U+030C
    {0x0000DE0030F, 0x020D},  // U+006F + U+030F
    {0x0000DE00311, 0x020F},  // U+006F + U+0311
    {0x0000DE0031B, 0x01A1},  // U+006F + U+031B
    {0x0000DE00323, 0x1ECD},  // U+006F + U+0323
    {0x0000DE00328, 0x01EB},  // U+006F + U+0328
    {0x0000E000301, 0x1E55},  // U+0070 + U+0301
    {0x0000E000307, 0x1E57},  // U+0070 + U+0307
    {0x0000E400301, 0x0155},  // U+0072 + U+0301
    {0x0000E400307, 0x1E59},  // U+0072 + U+0307
    {0x0000E40030C, 0x0159},  // U+0072 + U+030C
    {0x0000E40030F, 0x0211},  // U+0072 + U+030F
    {0x0000E400311, 0x0213},  // U+0072 + U+0311
    {0x0000E400323, 0x1E5B},  // U+0072 + U+0323
    {0x0000E400327, 0x0157},  // U+0072 + U+0327
    {0x0000E400331, 0x1E5F},  // U+0072 + U+0331
    {0x0000E600301, 0x015B},  // U+0073 + U+0301
    {0x0000E600302, 0x015D},  // U+0073 + U+0302
    {0x0000E600307, 0x1E61},  // U+0073 + U+0307
    {0x0000E60030C, 0x0161},  // U+0073 + U+030C
    {0x0000E600323, 0x1E63},  // U+0073 + U+0323
    {0x0000E600326, 0x0219},  // U+0073 + U+0326
    {0x0000E600327, 0x015F},  // U+0073 + U+0327
    {0x0000E800307, 0x1E6B},  // U+0074 + U+0307
    {0x0000E800308, 0x1E97},  // U+0074 + U+0308
    {0x0000E80030C, 0x0165},  // U+0074 + U+030C
    {0x0000E800323, 0x1E6D},  // U+0074 + U+0323
    {0x0000E800326, 0x021B},  // U+0074 + U+0326
    {0x0000E800327, 0x0163},  // U+0074 + U+0327
    {0x0000E80032D, 0x1E71},  // U+0074 + U+032D
    {0x0000E800331, 0x1E6F},  // U+0074 + U+0331
    {0x0000EA00300, 0x00F9},  // U+0075 + U+0300
    {0x0000EA00301, 0x00FA},  // U+0075 + U+0301
    {0x0000EA00302, 0x00FB},  // U+0075 + U+0302
    {0x0000EA00303, 0x0169},  // U+0075 + U+0303
    {0x0000EA00304, 0x016B},  // U+0075 + U+0304
    {0x0000EA00306, 0x016D},  // U+0075 + U+0306
    {0x0000EA00308, 0x00FC},  // U+0075 + U+0308
    {0x0000EA00309, 0x1EE7},  // U+0075 + U+0309
    {0x0000EA0030A, 0x016F},  // U+0075 + U+030A
    {0x0000EA0030B, 0x0171},  // U+0075 + U+030B
    {0x0000EA0030C, 0x01D4},  // U+0075 + U+030C
    {0x0000EA0030F, 0x0215},  // U+0075 + U+030F
    {0x0000EA00311, 0x0217},  // U+0075 + U+0311
    {0x0000EA0031B, 0x01B0},  // U+0075 + U+031B
    {0x0000EA00323, 0x1EE5},  // U+0075 + U+0323
    {0x0000EA00324, 0x1E73},  // U+0075 + U+0324
    {0x0000EA00328, 0x0173},  // U+0075 + U+0328
    {0x0000EA0032D, 0x1E77},  // U+0075 + U+032D
    {0x0000EA00330, 0x1E75},  // U+0075 + U+0330
    {0x0000EC00303, 0x1E7D},  // U+0076 + U+0303
    {0x0000EC00323, 0x1E7F},  // U+0076 + U+0323
    {0x0000EE00300, 0x1E81},  // U+0077 + U+0300
    {0x0000EE00301, 0x1E83},  // U+0077 + U+0301
    {0x0000EE00302, 0x0175},  // U+0077 + U+0302
    {0x0000EE00307, 0x1E87},  // U+0077 + U+0307
    {0x0000EE00308, 0x1E85},  // U+0077 + U+0308
    {0x0000EE0030A, 0x1E98},  // U+0077 + U+030A
    {0x0000EE00323, 0x1E89},  // U+0077 + U+0323
    {0x0000F000307, 0x1E8B},  // U+0078 + U+0307
    {0x0000F000308, 0x1E8D},  // U+0078 + U+0308
    {0x0000F200300, 0x1EF3},  // U+0079 + U+0300
    {0x0000F200301, 0x00FD},  // U+0079 + U+0301
    {0x0000F200302, 0x0177},  // U+0079 + U+0302
    {0x0000F200303, 0x1EF9},  // U+0079 + U+0303
    {0x0000F200304, 0x0233},  // U+0079 + U+0304
    {0x0000F200307, 0x1E8F},  // U+0079 + U+0307
    {0x0000F200308, 0x00FF},  // U+0079 + U+0308
    {0x0000F200309, 0x1EF7},  // U+0079 + U+0309
    {0x0000F20030A, 0x1E99},  // U+0079 + U+030A
    {0x0000F200323, 0x1EF5},  // U+0079 + U+0323
    {0x0000F400301, 0x017A},  // U+007A + U+0301
    {0x0000F400302, 0x1E91},  // U+007A + U+0302
    {0x0000F400307, 0x017C},  // U+007A + U+0307
    {0x0000F40030C, 0x017E},  // U+007A + U+030C
    {0x0000F400323, 0x1E93},  // U+007A + U+0323
    {0x0000F400331, 0x1E95},  // U+007A + U+0331
    {0x00018400300, 0x1EA6},  // U+00C2 + U+0300
    {0x00018400301, 0x1EA4},  // U+00C2 + U+0301
    {0x00018400303, 0x1EAA},  // U+00C2 + U+0303
    {0x00018400309, 0x1EA8},  // U+00C2 + U+0309
    {0x00018800304, 0x01DE},  // U+00C4 + U+0304
    {0x00018A00301, 0x01FA},  // U+00C5 + U+0301
    {0x00018C00301, 0x01FC},  // U+00C6 + U+0301
    {0x00018C00304, 0x01E2},  // U+00C6 + U+0304
    {0x00018E00301, 0x1E08},  // U+00C7 + U+0301
    {0x00019400300, 0x1EC0},  // U+00CA + U+0300
    {0x00019400301, 0x1EBE},  // U+00CA + U+0301
    {0x00019400303, 0x1EC4},  // U+00CA + U+0303
    {0x00019400309, 0x1EC2},  // U+00CA + U+0309
    {0x00019E00301, 0x1E2E},  // U+00CF + U+0301
    {0x0001A800300, 0x1ED2},  // U+00D4 + U+0300
    {0x0001A800301, 0x1ED0},  // U+00D4 + U+0301
    {0x0001A800303, 0x1ED6},  // U+00D4 + U+0303
    {0x0001A800309, 0x1ED4},  // U+00D4 + U+0309
    {0x0001AA00301, 0x1E4C},  // U+00D5 + U+0301
    {0x0001AA00304, 0x022C},  // U+00D5 + U+0304
    {0x0001AA00308, 0x1E4E},  // U+00D5 + U+0308
    {0x0001AC00304, 0x022A},  // U+00D6 + U+0304
    {0x0001B000301, 0x01FE},  // U+00D8 + U+0301
    {0x0001B800300, 0x01DB},  // U+00DC + U+0300
    {0x0001B800301, 0x01D7},  // U+00DC + U+0301
    {0x0001B800304, 0x01D5},  // U+00DC + U+0304
    {0x0001B80030C, 0x01D9},  // U+00DC + U+030C
    {0x0001C400300, 0x1EA7},  // U+00E2 + U+0300
    {0x0001C400301, 0x1EA5},  // U+00E2 + U+0301
    {0x0001C400303, 0x1EAB},  // U+00E2 + U+0303
    {0x0001C400309, 0x1EA9},  // U+00E2 + U+0309
    {0x0001C800304, 0x01DF},  // U+00E4 + U+0304
    {0x0001CA00301, 0x01FB},  // U+00E5 + U+0301
    {0x0001CC00301, 0x01FD},  // U+00E6 + U+0301
    {0x0001CC00304, 0x01E3},  // U+00E6 + U+0304
    {0x0001CE00301, 0x1E09},  // U+00E7 + U+0301
    {0x0001D400300, 0x1EC1},  // U+00EA + U+0300
    {0x0001D400301, 0x1EBF},  // U+00EA + U+0301
    {0x0001D400303, 0x1EC5},  // U+00EA + U+0303
    {0x0001D400309, 0x1EC3},  // U+00EA + U+0309
    {0x0001DE00301, 0x1E2F},  // U+00EF + U+0301
    {0x0001E800300, 0x1ED3},  // U+00F4 + U+0300
    {0x0001E800301, 0x1ED1},  // U+00F4 + U+0301
    {0x0001E800303, 0x1ED7},  // U+00F4 + U+0303
    {0x0001E800309, 0x1ED5},  // U+00F4 + U+0309
    {0x0001EA00301, 0x1E4D},  // U+00F5 + U+0301
    {0x0001EA00304, 0x022D},  // U+00F5 + U+0304
    {0x0001EA00308, 0x1E4F},  // U+00F5 + U+0308
    {0x0001EC00304, 0x022B},  // U+00F6 + U+0304
    {0x0001F000301, 0x01FF},  // U+00F8 + U+0301
    {0x0001F800300, 0x01DC},  // U+00FC + U+0300
    {0x0001F800301, 0x01D8},  // U+00FC + U+0301
    {0x0001F800304, 0x01D6},  // U+00FC + U+0304
    {0x0001F80030C, 0x01DA},  // U+00FC + U+030C
    {0x00020400300, 0x1EB0},  // U+0102 + U+0300
    {0x00020400301, 0x1EAE},  // U+0102 + U+0301
    {0x00020400303, 0x1EB4},  // U+0102 + U+0303
    {0x00020400309, 0x1EB2},  // U+0102 + U+0309
    {0x00020600300, 0x1EB1},  // U+0103 + U+0300
    {0x00020600301, 0x1EAF},  // U+0103 + U+0301
    {0x00020600303, 0x1EB5},  // U+0103 + U+0303
    {0x00020600309, 0x1EB3},  // U+0103 + U+0309
    {0x00022400300, 0x1E14},  // U+0112 + U+0300
    {0x00022400301, 0x1E16},  // U+0112 + U+0301
    {0x00022600300, 0x1E15},  // U+0113 + U+0300
    {0x00022600301, 0x1E17},  // U+0113 + U+0301
    {0x00029800300, 0x1E50},  // U+014C + U+0300
    {0x00029800301, 0x1E52},  // U+014C + U+0301
    {0x00029A00300, 0x1E51},  // U+014D + U+0300
    {0x00029A00301, 0x1E53},  // U+014D + U+0301
    {0x0002B400307, 0x1E64},  // U+015A + U+0307
    {0x0002B600307, 0x1E65},  // U+015B + U+0307
    {0x0002C000307, 0x1E66},  // U+0160 + U+0307
    {0x0002C200307, 0x1E67},  // U+0161 + U+0307
    {0x0002D000301, 0x1E78},  // U+0168 + U+0301
    {0x0002D200301, 0x1E79},  // U+0169 + U+0301
    {0x0002D400308, 0x1E7A},  // U+016A + U+0308
    {0x0002D600308, 0x1E7B},  // U+016B + U+0308
    {0x0002FE00307, 0x1E9B},  // U+017F + U+0307
    {0x00034000300, 0x1EDC},  // U+01A0 + U+0300
    {0x00034000301, 0x1EDA},  // U+01A0 + U+0301
    {0x00034000303, 0x1EE0},  // U+01A0 + U+0303
    {0x00034000309, 0x1EDE},  // U+01A0 + U+0309
    {0x00034000323, 0x1EE2},  // U+01A0 + U+0323
    {0x00034200300, 0x1EDD},  // U+01A1 + U+0300
    {0x00034200301, 0x1EDB},  // U+01A1 + U+0301
    {0x00034200303, 0x1EE1},  // U+01A1 + U+0303
    {0x00034200309, 0x1EDF},  // U+01A1 + U+0309
    {0x00034200323, 0x1EE3},  // U+01A1 + U+0323
    {0x00035E00300, 0x1EEA},  // U+01AF + U+0300
    {0x00035E00301, 0x1EE8},  // U+01AF + U+0301
    {0x00035E00303, 0x1EEE},  // U+01AF + U+0303
    {0x00035E00309, 0x1EEC},  // U+01AF + U+0309
    {0x00035E00323, 0x1EF0},  // U+01AF + U+0323
    {0x00036000300, 0x1EEB},  // U+01B0 + U+0300
    {0x00036000301, 0x1EE9},  // U+01B0 + U+0301
    {0x00036000303, 0x1EEF},  // U+01B0 + U+0303
    {0x00036000309, 0x1EED},  // U+01B0 + U+0309
    {0x00036000323, 0x1EF1},  // U+01B0 + U+0323
    {0x00036E0030C, 0x01EE},  // U+01B7 + U+030C
    {0x0003D400304, 0x01EC},  // U+01EA + U+0304
    {0x0003D600304, 0x01ED},  // U+01EB + U+0304
    {0x00044C00304, 0x01E0},  // U+0226 + U+0304
    {0x00044E00304, 0x01E1},  // U+0227 + U+0304
    {0x00045000306, 0x1E1C},  // U+0228 + U+0306
    {0x00045200306, 0x1E1D},  // U+0229 + U+0306
    {0x00045C00304, 0x0230},  // U+022E + U+0304
    {0x00045E00304, 0x0231},  // U+022F + U+0304
    {0x0005240030C, 0x01EF},  // U+0292 + U+030C
    {0x003C6C00304, 0x1E38},  // U+1E36 + U+0304
    {0x003C6E00304, 0x1E39},  // U+1E37 + U+0304
    {0x003CB400304, 0x1E5C},  // U+1E5A + U+0304
    {0x003CB600304, 0x1E5D},  // U+1E5B + U+0304
    {0x003CC400307, 0x1E68},  // U+1E62 + U+0307
    {0x003CC600307, 0x1E69},  // U+1E63 + U+0307
    {0x003D4000302, 0x1EAC},  // U+1EA0 + U+0302
    {0x003D4000306, 0x1EB6},  // U+1EA0 + U+0306
    {0x003D4200302, 0x1EAD},  // U+1EA1 + U+0302
    {0x003D4200306, 0x1EB7},  // U+1EA1 + U+0306
    {0x003D7000302, 0x1EC6},  // U+1EB8 + U+0302
    {0x003D7200302, 0x1EC7},  // U+1EB9 + U+0302
    {0x003D9800302, 0x1ED8},  // U+1ECC + U+0302
    {0x003D9A00302, 0x1ED9},  // U+1ECD + U+0302
};

struct ccc_entry { char32_t cp; std::uint8_t ccc; };
inline constexpr ccc_entry combining_class_table[] = {
    {0x0300, 230},
    {0x0301, 230},
    {0x0302, 230},
    {0x0303, 230},
    {0x0304, 230},
    {0x0305, 230},
    {0x0306, 230},
    {0x0307, 230},
    {0x0308, 230},
    {0x0309, 230},
    {0x030A, 230},
    {0x030B, 230},
    {0x030C, 230},
    {0x030D, 230},
    {0x030E, 230},
    {0x030F, 230},
    {0x0310, 230},
    {0x0311, 230},
    {0x0312, 230},
    {0x0313, 230},
    {0x0314, 230},
    {0x0315, 232},
    {0x0316, 220},
    {0x0317, 220},
    {0x0318, 220},
    {0x0319, 220},
    {0x031A, 232},
    {0x031B, 216},
    {0x031C, 220},
    {0x031D, 220},
    {0x031E, 220},
    {0x031F, 220},
    {0x0320, 220},
    {0x0321, 202},
    {0x0322, 202},
    {0x0323, 220},
    {0x0324, 220},
    {0x0325, 220},
    {0x0326, 220},
    {0x0327, 202},
    {0x0328, 202},
    {0x0329, 220},
    {0x032A, 220},
    {0x032B, 220},
    {0x032C, 220},
    {0x032D, 220},
    {0x032E, 220},
    {0x032F, 220},
    {0x0330, 220},
    {0x0331, 220},
    {0x0332, 220},
    {0x0333, 220},
    {0x0334, 1},
    {0x0335, 1},
    {0x0336, 1},
    {0x0337, 1},
    {0x0338, 1},
    {0x0339, 220},
    {0x033A, 220},
    {0x033B, 220},
    {0x033C, 220},
    {0x033D, 230},
    {0x033E, 230},
    {0x033F, 230},
    {0x0340, 230},
    {0x0341, 230},
    {0x0342, 230},
    {0x0343, 230},
    {0x0344, 230},
    {0x0345, 240},
    {0x0346, 230},
    {0x0347, 220},
    {0x0348, 220},
    {0x0349, 220},
    {0x034A, 230},
    {0x034B, 230},
    {0x034C, 230},
    {0x034D, 220},
    {0x034E, 220},
    {0x0350, 230},
    {0x0351, 230},
    {0x0352, 230},
    {0x0353, 220},
    {0x0354, 220},
    {0x0355, 220},
    {0x0356, 220},
    {0x0357, 230},
    {0x0358, 232},
    {0x0359, 220},
    {0x035A, 220},
    {0x035B, 230},
    {0x035C, 233},
    {0x035D, 234},
    {0x035E, 234},
    {0x035F, 233},
    {0x0360, 234},
    {0x0361, 234},
    {0x0362, 233},
    {0x0363, 230},
    {0x0364, 230},
    {0x0365, 230},
    {0x0366, 230},
    {0x0367, 230},
    {0x0368, 230},
    {0x0369, 230},
    {0x036A, 230},
    {0x036B, 230},
    {0x036C, 230},
    {0x036D, 230},
    {0x036E, 230},
    {0x036F, 230},
};

struct lower_entry { char32_t cp; char32_t lower; };
inline constexpr lower_entry lowercase_table[] = {
    {0x0041, 0x0061},
    {0x0042, 0x0062},
    {0x0043, 0x0063},
    {0x0044, 0x0064},
    {0x0045, 0x0065},
    {0x0046, 0x0066},
    {0x0047, 0x0067},
    {0x0048, 0x0068},
    {0x0049, 0x0069},
    {0x004A, 0x006A},
    {0x004B, 0x006B},
    {0x004C, 0x006C},
    {0x004D, 0x006D},
    {0x004E, 0x006E},
    {0x004F, 0x006F},
    {0x0050, 0x0070},
    {0x0051, 0x0071},
    {0x0052, 0x0072},
    {0x0053, 0x0073},
    {0x0054, 0x0074},
    {0x0055, 0x0075},
    {0x0056, 0x0076},
    {0x0057, 0x0077},
    {0x0058, 0x0078},
    {0x0059, 0x0079},
    {0x005A, 0x007A},
    {0x00C0, 0x00E0},
    {0x00C1, 0x00E1},
    {0x00C2, 0x00E2},
    {0x00C3, 0x00E3},
    {0x00C4, 0x00E4},
    {0x00C5, 0x00E5},
    {0x00C6, 0x00E6},
    {0x00C7, 0x00E7},
    {0x00C8, 0x00E8},
    {0x00C9, 0x00E9},
    {0x00CA, 0x00EA},
    {0x00CB, 0x00EB},
    {0x00CC, 0x00EC},
    {0x00CD, 0x00ED},
    {0x00CE, 0x00EE},
    {0x00CF, 0x00EF},
    {0x00D0, 0x00F0},
    {0x00D1, 0x00F1},
    {0x00D2, 0x00F2},
    {0x00D3, 0x00F3},
    {0x00D4, 0x00F4},
    {0x00D5, 0x00F5},
    {0x00D6, 0x00F6},
    {0x00D8, 0x00F8},
    {0x00D9, 0x00F9},
    {0x00DA, 0x00FA},
    {0x00DB, 0x00FB},
    {0x00DC, 0x00FC},
    {0x00DD, 0x00FD},
    {0x00DE, 0x00FE},
    {0x0100, 0x0101},
    {0x0102, 0x0103},
    {0x0104, 0x0105},
    {0x0106, 0x0107},
    {0x0108, 0x0109},
    {0x010A, 0x010B},
    {0x010C, 0x010D},
    {0x010E, 0x010F},
    {0x0110, 0x0111},
    {0x0112, 0x0113},
    {0x0114, 0x0115},
    {0x0116, 0x0117},
    {0x0118, 0x0119},
    {0x011A, 0x011B},
    {0x011C, 0x011D},
    {0x011E, 0x011F},
    {0x0120, 0x0121},
    {0x0122, 0x0123},
    {0x0124, 0x0125},
    {0x0126, 0x0127},
    {0x0128, 0x0129},
    {0x012A, 0x012B},
    {0x012C, 0x012D},
    {0x012E, 0x012F},
    {0x0132, 0x0133},
    {0x0134, 0x0135},
    {0x0136, 0x0137},
    {0x0139, 0x013A},
    {0x013B, 0x013C},
    {0x013D, 0x013E},
    {0x013F, 0x0140},
    {0x0141, 0x0142},
    {0x0143, 0x0144},
    {0x0145, 0x0146},
    {0x0147, 0x0148},
    {0x014A, 0x014B},
    {0x014C, 0x014D},
    {0x014E, 0x014F},
    {0x0150, 0x0151},
    {0x0152, 0x0153},
    {0x0154, 0x0155},
    {0x0156, 0x0157},
    {0x0158, 0x0159},
    {0x015A, 0x015B},
    {0x015C, 0x015D},
    {0x015E, 0x015F},
    {0x0160, 0x0161},
    {0x0162, 0x0163},
    {0x0164, 0x0165},
    {0x0166, 0x0167},
    {0x0168, 0x0169},
    {0x016A, 0x016B},
    {0x016C, 0x016D},
    {0x016E, 0x016F},
    {0x0170, 0x0171},
    {0x0172, 0x0173},
    {0x0174, 0x0175},
    {0x0176, 0x0177},
    {0x0178, 0x00FF},
    {0x0179, 0x017A},
    {0x017B, 0x017C},
    {0x017D, 0x017E},
    {0x0181, 0x0253},
    {0x0182, 0x0183},
    {0x0184, 0x0185},
    {0x0186, 0x0254},
    {0x0187, 0x0188},
    {0x0189, 0x0256},
    {0x018A, 0x0257},
    {0x018B, 0x018C},
    {0x018E, 0x01DD},
    {0x018F, 0x0259},
    {0x0190, 0x025B},
    {0x0191, 0x0192},
    {0x0193, 0x0260},
    {0x0194, 0x0263},
    {0x0196, 0x0269},
    {0x0197, 0x0268},
    {0x0198, 0x0199},
    {0x019C, 0x026F},
    {0x019D, 0x0272},
    {0x019F, 0x0275},
    {0x01A0, 0x01A1},
    {0x01A2, 0x01A3},
    {0x01A4, 0x01A5},
    {0x01A6, 0x0280},
    {0x01A7, 0x01A8},
    {0x01A9, 0x0283},
    {0x01AC, 0x01AD},
    {0x01AE, 0x0288},
    {0x01AF, 0x01B0},
    {0x01B1, 0x028A},
    {0x01B2, 0x028B},
    {0x01B3, 0x01B4},
    {0x01B5, 0x01B6},
    {0x01B7, 0x0292},
    {0x01B8, 0x01B9},
    {0x01BC, 0x01BD},
    {0x01C4, 0x01C6},
    {0x01C5, 0x01C6},
    {0x01C7, 0x01C9},
    {0x01C8, 0x01C9},
    {0x01CA, 0x01CC},
    {0x01CB, 0x01CC},
    {0x01CD, 0x01CE},
    {0x01CF, 0x01D0},
    {0x01D1, 0x01D2},
    {0x01D3, 0x01D4},
    {0x01D5, 0x01D6},
    {0x01D7, 0x01D8},
    {0x01D9, 0x01DA},
    {0x01DB, 0x01DC},
    {0x01DE, 0x01DF},
    {0x01E0, 0x01E1},
    {0x01E2, 0x01E3},
    {0x01E4, 0x01E5},
    {0x01E6, 0x01E7},
    {0x01E8, 0x01E9},
    {0x01EA, 0x01EB},
    {0x01EC, 0x01ED},
    {0x01EE, 0x01EF},
    {0x01F1, 0x01F3},
    {0x01F2, 0x01F3},
    {0x01F4, 0x01F5},
    {0x01F6, 0x0195},
    {0x01F7, 0x01BF},
    {0x01F8, 0x01F9},
    {0x01FA, 0x01FB},
    {0x01FC, 0x01FD},
    {0x01FE, 0x01FF},
    {0x0200, 0x0201},
    {0x0202, 0x0203},
    {0x0204, 0x0205},
    {0x0206, 0x0207},
    {0x0208, 0x0209},
    {0x020A, 0x020B},
    {0x020C, 0x020D},
    {0x020E, 0x020F},
    {0x0210, 0x0211},
    {0x0212, 0x0213},
    {0x0214, 0x0215},
    {0x0216, 0x0217},
    {0x0218, 0x0219},
    {0x021A, 0x021B},
    {0x021C, 0x021D},
    {0x021E, 0x021F},
    {0x0220, 0x019E},
    {0x0222, 0x0223},
    {0x0224, 0x0225},
    {0x0226, 0x0227},
    {0x0228, 0x0229},
    {0x022A, 0x022B},
    {0x022C, 0x022D},
    {0x022E, 0x022F},
    {0x0230, 0x0231},
    {0x0232, 0x0233},
    {0x023A, 0x2C65},
    {0x023B, 0x023C},
    {0x023D, 0x019A},
    {0x023E, 0x2C66},
    {0x0241, 0x0242},
    {0x0243, 0x0180},
    {0x0244, 0x0289},
    {0x0245, 0x028C},
    {0x0246, 0x0247},
    {0x0248, 0x0249},
    {0x024A, 0x024B},
    {0x024C, 0x024D},
    {0x024E, 0x024F},
    {0x1E00, 0x1E01},
    {0x1E02, 0x1E03},
    {0x1E04, 0x1E05},
    {0x1E06, 0x1E07},
    {0x1E08, 0x1E09},
    {0x1E0A, 0x1E0B},
    {0x1E0C, 0x1E0D},
    {0x1E0E, 0x1E0F},
    {0x1E10, 0x1E11},
    {0x1E12, 0x1E13},
    {0x1E14, 0x1E15},
    {0x1E16, 0x1E17},
    {0x1E18, 0x1E19},
    {0x1E1A, 0x1E1B},
    {0x1E1C, 0x1E1D},
    {0x1E1E, 0x1E1F},
    {0x1E20, 0x1E21},
    {0x1E22, 0x1E23},
    {0x1E24, 0x1E25},
    {0x1E26, 0x1E27},
    {0x1E28, 0x1E29},
    {0x1E2A, 0x1E2B},
    {0x1E2C, 0x1E2D},
    {0x1E2E, 0x1E2F},
    {0x1E30, 0x1E31},
    {0x1E32, 0x1E33},
    {0x1E34, 0x1E35},
    {0x1E36, 0x1E37},
    {0x1E38, 0x1E39},
    {0x1E3A, 0x1E3B},
    {0x1E3C, 0x1E3D},
    {0x1E3E, 0x1E3F},
    {0x1E40, 0x1E41},
    {0x1E42, 0x1E43},
    {0x1E44, 0x1E45},
    {0x1E46, 0x1E47},
    {0x1E48, 0x1E49},
    {0x1E4A, 0x1E4B},
    {0x1E4C, 0x1E4D},
    {0x1E4E, 0x1E4F},
    {0x1E50, 0x1E51},
    {0x1E52, 0x1E53},
    {0x1E54, 0x1E55},
    {0x1E56, 0x1E57},
    {0x1E58, 0x1E59},
    {0x1E5A, 0x1E5B},
    {0x1E5C, 0x1E5D},
    {0x1E5E, 0x1E5F},
    {0x1E60, 0x1E61},
    {0x1E62, 0x1E63},
    {0x1E64, 0x1E65},
    {0x1E66, 0x1E67},
    {0x1E68, 0x1E69},
    {0x1E6A, 0x1E6B},
    {0x1E6C, 0x1E6D},
    {0x1E6E, 0x1E6F},
    {0x1E70, 0x1E71},
    {0x1E72, 0x1E73},
    {0x1E74, 0x1E75},
    {0x1E76, 0x1E77},
    {0x1E78, 0x1E79},
    {0x1E7A, 0x1E7B},
    {0x1E7C, 0x1E7D},
    {0x1E7E, 0x1E7F},
    {0x1E80, 0x1E81},
    {0x1E82, 0x1E83},
    {0x1E84, 0x1E85},
    {0x1E86, 0x1E87},
    {0x1E88, 0x1E89},
    {0x1E8A, 0x1E8B},
    {0x1E8C, 0x1E8D},
    {0x1E8E, 0x1E8F},
    {0x1E90, 0x1E91},
    {0x1E92, 0x1E93},
    {0x1E94, 0x1E95},
    {0x1E9E, 0x00DF},
    {0x1EA0, 0x1EA1},
    {0x1EA2, 0x1EA3},
    {0x1EA4, 0x1EA5},
    {0x1EA6, 0x1EA7},
    {0x1EA8, 0x1EA9},
    {0x1EAA, 0x1EAB},
    {0x1EAC, 0x1EAD},
    {0x1EAE, 0x1EAF},
    {0x1EB0, 0x1EB1},
    {0x1EB2, 0x1EB3},
    {0x1EB4, 0x1EB5},
    {0x1EB6, 0x1EB7},
    {0x1EB8, 0x1EB9},
    {0x1EBA, 0x1EBB},
    {0x1EBC, 0x1EBD},
    {0x1EBE, 0x1EBF},
    {0x1EC0, 0x1EC1},
    {0x1EC2, 0x1EC3},
    {0x1EC4, 0x1EC5},
    {0x1EC6, 0x1EC7},
    {0x1EC8, 0x1EC9},
    {0x1ECA, 0x1ECB},
    {0x1ECC, 0x1ECD},
    {0x1ECE, 0x1ECF},
    {0x1ED0, 0x1ED1},
    {0x1ED2, 0x1ED3},
    {0x1ED4, 0x1ED5},
    {0x1ED6, 0x1ED7},
    {0x1ED8, 0x1ED9},
    {0x1EDA, 0x1EDB},
    {0x1EDC, 0x1EDD},
    {0x1EDE, 0x1EDF},
    {0x1EE0, 0x1EE1},
    {0x1EE2, 0x1EE3},
    {0x1EE4, 0x1EE5},
    {0x1EE6, 0x1EE7},
    {0x1EE8, 0x1EE9},
    {0x1EEA, 0x1EEB},
    {0x1EEC, 0x1EED},
    {0x1EEE, 0x1EEF},
    {0x1EF0, 0x1EF1},
    {0x1EF2, 0x1EF3},
    {0x1EF4, 0x1EF5},
    {0x1EF6, 0x1EF7},
    {0x1EF8, 0x1EF9},
    {0x1EFA, 0x1EFB},
    {0x1EFC, 0x1EFD},
    {0x1EFE, 0x1EFF},
};

}  // namespace cxrval::detail

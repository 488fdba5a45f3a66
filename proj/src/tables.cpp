#include "airyderiv/tables.hpp"

namespace airyderiv::tables {

const std::array<std::string_view, kTable1Rows> kP = {
    "1",           "0",           "x",          "1",           "x^2",           "4x",
    "x^3+4",       "9x^2",        "x^4+28x",    "16x^3+28",    "x^5+100x^2",    "25x^4+280x",
    "x^6+260x^3+280", "36x^5+1380x^2", "x^7+560x^4+3640x", "49x^6+4760x^3+3640"};

const std::array<std::string_view, kTable1Rows> kQ = {
    "0",          "1",          "0",          "x",          "2",            "x^2",
    "6x",         "x^3+10",     "12x^2",      "x^4+52x",    "20x^3+80",     "x^5+160x^2",
    "30x^4+600x", "x^6+380x^3+880", "42x^5+2520x^2", "x^7+770x^4+8680x"};

const std::array<std::string_view, kTable2Rows> kR = {
    "1", "0", "2x", "2", "8x^2", "28x", "32x^3+28", "256x^2", "128x^4+728x", "1856x^3+728",
    "512x^5+10592x^2", "11776x^4+27664x", "2048x^6+112896x^3+27664"};

const std::array<std::string_view, kTable2Rows> kS = {
    "0", "1", "0", "4x", "6", "16x^2", "80x", "64x^3+108", "672x^2", "256x^4+2512x",
    "4608x^3+3240", "1024x^5+32896x^2", "28160x^4+108416x"};

const std::array<std::string_view, kTable2Rows> kT = {
    "0", "0", "2", "0", "8x", "20", "32x^2", "224x", "128x^3+440", "1728x^2",
    "512x^4+8480x", "11264x^3+14960", "2048x^5+99584x^2"};

}  // namespace airyderiv::tables

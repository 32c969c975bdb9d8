#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "core.hpp"
#include "randgen.hpp"

// Published empirical sizes (tables 1-3) and powers (tables 4-9), in
// percent, at nominal level 5% and 10^5 replications. Power tables carry
// the shape parameter of the family named in the table.

namespace nbue {

struct ReferenceRow {
    double theta = 0.0;
    std::size_t n = 0;
    std::vector<double> pct; // one entry per column
};

struct ReferenceTable {
    int id = 0;
    Family family = Family::exponential; // exponential: size table
    std::vector<TestSpec> columns;
    std::vector<ReferenceRow> rows;

    bool is_size_table() const { return family == Family::exponential; }
};

inline const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = {
        {1, Family::exponential, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T5), TestSpec(TestId::T6)},
         {
          {0.0, 5, {4.87, 4.92, 4.99, 5.09, 4.50, 4.69}},
          {0.0, 6, {4.89, 4.86, 4.94, 4.82, 5.48, 4.81}},
          {0.0, 7, {4.97, 4.97, 5.01, 5.22, 5.23, 5.06}},
          {0.0, 8, {4.90, 4.93, 4.90, 5.00, 5.06, 4.71}},
          {0.0, 9, {4.87, 4.89, 4.85, 4.83, 5.03, 5.10}},
          {0.0, 10, {4.93, 4.84, 4.83, 4.88, 4.86, 4.46}},
          {0.0, 11, {4.46, 4.45, 4.62, 4.30, 4.65, 5.13}},
          {0.0, 12, {4.83, 4.83, 4.91, 4.38, 6.11, 5.49}},
          {0.0, 13, {4.85, 4.75, 4.90, 4.44, 5.67, 4.76}},
          {0.0, 14, {4.94, 5.03, 5.02, 4.64, 4.41, 4.82}},
          {0.0, 15, {4.87, 4.83, 4.98, 4.62, 5.76, 4.73}}}},
        {2, Family::exponential, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T5), TestSpec(TestId::T6)},
         {
          {0.0, 16, {4.72, 4.56, 4.82, 4.92, 5.88, 4.90}},
          {0.0, 17, {5.27, 5.17, 5.28, 4.22, 5.34, 5.05}},
          {0.0, 18, {4.67, 4.80, 4.77, 4.64, 4.51, 4.73}},
          {0.0, 19, {4.60, 4.73, 4.80, 4.83, 5.31, 4.91}},
          {0.0, 20, {4.96, 4.88, 4.84, 4.63, 5.22, 5.23}},
          {0.0, 25, {4.94, 5.02, 5.06, 4.70, 5.86, 4.90}},
          {0.0, 30, {4.81, 4.82, 5.02, 4.86, 5.62, 5.15}}}},
        {3, Family::exponential, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T2), TestSpec(TestId::T3), TestSpec(TestId::T4), TestSpec(TestId::T6), TestSpec(TestId::T7), TestSpec(TestId::T8)},
         {
          {0.0, 35, {5.12, 5.16, 5.19, 4.64, 2.48, 3.02, 6.63, 5.19, 4.72, 5.06}},
          {0.0, 40, {5.19, 5.33, 5.07, 4.75, 2.78, 3.05, 5.92, 4.69, 4.85, 5.51}},
          {0.0, 45, {5.25, 5.25, 5.32, 4.86, 3.06, 3.18, 5.99, 5.07, 4.96, 5.20}},
          {0.0, 50, {4.85, 5.03, 4.70, 4.92, 3.03, 3.26, 6.12, 5.14, 5.00, 5.28}},
          {0.0, 55, {5.11, 5.14, 4.97, 5.08, 3.15, 3.48, 6.22, 5.04, 5.07, 4.82}},
          {0.0, 60, {5.26, 5.34, 5.39, 4.90, 3.29, 3.48, 6.36, 4.99, 4.98, 5.08}},
          {0.0, 65, {4.95, 4.86, 4.75, 4.88, 3.19, 3.44, 5.93, 6.63, 4.82, 5.02}},
          {0.0, 70, {4.88, 4.80, 4.62, 5.30, 3.36, 3.76, 6.35, 7.29, 5.23, 5.25}},
          {0.0, 75, {4.77, 4.75, 4.69, 5.31, 3.61, 3.76, 6.28, 7.06, 5.45, 4.91}},
          {0.0, 80, {4.96, 4.87, 4.81, 5.04, 3.80, 3.89, 6.10, 6.76, 4.91, 5.63}},
          {0.0, 85, {4.66, 4.65, 4.80, 4.74, 3.16, 3.56, 6.07, 6.48, 4.73, 5.14}},
          {0.0, 90, {5.20, 5.10, 5.02, 4.68, 3.41, 3.58, 5.79, 6.16, 4.56, 4.82}},
          {0.0, 95, {5.12, 5.29, 5.27, 4.63, 3.13, 3.73, 5.73, 6.28, 4.70, 5.08}},
          {0.0, 100, {5.39, 5.23, 5.21, 4.77, 3.64, 3.66, 5.42, 6.35, 4.99, 5.02}}}},
        {4, Family::weibull, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T5), TestSpec(TestId::T6)},
         {
          {1.1, 5, {7.00, 6.99, 7.05, 7.11, 6.73, 7.28}},
          {1.1, 10, {8.51, 8.63, 8.70, 8.82, 5.86, 8.36}},
          {1.1, 15, {10.01, 10.15, 10.29, 8.88, 12.20, 9.54}},
          {1.1, 20, {11.12, 11.21, 11.35, 10.56, 12.64, 11.22}},
          {1.1, 25, {11.73, 12.02, 12.29, 11.71, 17.26, 11.34}},
          {1.2, 5, {9.39, 9.48, 9.42, 9.59, 8.14, 8.43}},
          {1.2, 10, {12.68, 12.74, 12.83, 13.09, 9.71, 12.67}},
          {1.2, 15, {16.50, 16.50, 17.07, 16.47, 20.56, 15.59}},
          {1.2, 20, {21.05, 21.45, 22.34, 19.96, 24.18, 18.95}},
          {1.2, 25, {23.06, 23.71, 24.65, 23.74, 33.29, 21.86}},
          {1.3, 5, {11.73, 11.95, 11.98, 12.19, 11.38, 11.83}},
          {1.3, 10, {18.53, 18.54, 18.90, 19.14, 14.76, 17.68}},
          {1.3, 15, {26.92, 27.66, 28.38, 25.42, 32.43, 23.64}},
          {1.3, 20, {31.90, 33.01, 34.68, 33.15, 37.90, 29.59}},
          {1.3, 25, {38.21, 39.66, 41.36, 40.16, 51.58, 36.20}},
          {1.4, 5, {13.84, 13.88, 14.13, 14.32, 13.92, 14.00}},
          {1.4, 10, {25.90, 26.24, 27.28, 27.67, 21.03, 24.25}},
          {1.4, 15, {35.88, 36.82, 38.05, 37.58, 44.14, 33.59}},
          {1.4, 20, {46.62, 48.06, 50.29, 48.52, 53.46, 44.16}},
          {1.4, 25, {55.63, 57.97, 60.00, 58.01, 67.87, 52.29}},
          {1.5, 5, {17.52, 17.86, 18.04, 18.28, 16.98, 16.72}},
          {1.5, 10, {33.61, 34.44, 35.72, 36.14, 28.87, 31.79}},
          {1.5, 15, {47.59, 49.50, 51.06, 48.60, 57.02, 44.48}},
          {1.5, 20, {59.77, 61.60, 63.94, 62.78, 68.89, 57.98}},
          {1.5, 25, {70.49, 72.23, 74.13, 73.17, 81.84, 66.87}}}},
        {5, Family::gamma, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T5), TestSpec(TestId::T6)},
         {
          {1.2, 5, {7.41, 7.54, 7.61, 7.68, 6.37, 6.47}},
          {1.2, 10, {8.72, 8.77, 8.86, 8.99, 5.98, 8.04}},
          {1.2, 15, {10.66, 10.76, 10.98, 9.85, 13.23, 9.55}},
          {1.2, 20, {11.49, 11.48, 12.15, 10.95, 14.69, 11.16}},
          {1.2, 25, {12.38, 12.77, 13.25, 12.54, 19.81, 11.86}},
          {1.4, 5, {9.69, 9.82, 10.08, 10.24, 8.83, 8.93}},
          {1.4, 10, {13.71, 13.76, 14.31, 14.52, 10.13, 12.50}},
          {1.4, 15, {17.17, 17.99, 18.76, 16.82, 24.03, 16.48}},
          {1.4, 20, {20.91, 21.63, 23.33, 20.96, 27.40, 18.70}},
          {1.4, 25, {24.01, 25.39, 27.35, 25.54, 38.48, 22.24}},
          {1.6, 5, {11.74, 11.80, 11.95, 12.12, 11.89, 11.80}},
          {1.6, 10, {19.08, 19.37, 20.51, 20.85, 15.70, 17.23}},
          {1.6, 15, {25.50, 26.61, 28.57, 25.91, 35.98, 23.16}},
          {1.6, 20, {31.61, 33.56, 36.23, 33.26, 42.92, 28.75}},
          {1.6, 25, {37.92, 40.27, 43.32, 40.71, 57.52, 34.58}},
          {1.8, 5, {14.83, 15.02, 15.25, 15.50, 14.24, 13.89}},
          {1.8, 10, {25.57, 26.38, 28.03, 28.40, 22.36, 23.21}},
          {1.8, 15, {35.43, 37.02, 39.73, 36.80, 48.79, 32.03}},
          {1.8, 20, {42.66, 44.79, 48.32, 47.47, 58.47, 38.99}},
          {1.8, 25, {51.04, 53.87, 58.19, 56.14, 74.20, 46.86}},
          {2.0, 5, {17.31, 17.48, 17.81, 18.11, 16.92, 16.33}},
          {2.0, 10, {31.92, 32.89, 34.73, 35.09, 29.12, 28.44}},
          {2.0, 15, {44.33, 46.19, 49.66, 46.76, 60.48, 39.85}},
          {2.0, 20, {54.64, 57.50, 62.08, 60.05, 71.04, 49.25}},
          {2.0, 25, {63.46, 66.89, 71.67, 71.04, 85.97, 58.42}}}},
        {6, Family::lfr, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T5), TestSpec(TestId::T6)},
         {
          {0.25, 5, {6.85, 6.94, 7.04, 7.13, 6.02, 6.54}},
          {0.25, 10, {8.57, 8.46, 8.48, 8.61, 5.40, 8.48}},
          {0.25, 15, {10.12, 10.01, 9.80, 8.79, 11.22, 9.92}},
          {0.25, 20, {11.53, 11.50, 11.47, 10.36, 11.47, 11.78}},
          {0.25, 25, {13.17, 12.75, 12.67, 12.98, 15.42, 13.54}},
          {0.5, 5, {8.51, 8.45, 8.15, 8.29, 7.79, 8.35}},
          {0.5, 10, {11.57, 11.59, 11.70, 11.87, 7.25, 11.62}},
          {0.5, 15, {14.82, 14.82, 14.55, 13.37, 15.47, 15.05}},
          {0.5, 20, {18.06, 17.91, 17.58, 16.81, 16.97, 17.98}},
          {0.5, 25, {21.74, 21.53, 20.93, 20.98, 24.24, 22.39}},
          {0.75, 5, {8.99, 9.00, 9.12, 9.24, 8.80, 9.24}},
          {0.75, 10, {14.35, 14.33, 14.20, 14.47, 9.32, 13.87}},
          {0.75, 15, {19.03, 19.04, 19.03, 17.60, 19.53, 18.73}},
          {0.75, 20, {24.70, 24.61, 24.29, 22.79, 21.50, 23.91}},
          {0.75, 25, {29.15, 28.97, 28.40, 28.02, 28.87, 28.65}},
          {1.0, 5, {10.87, 10.83, 10.65, 10.79, 8.94, 9.46}},
          {1.0, 10, {16.75, 16.72, 16.54, 16.85, 11.26, 16.37}},
          {1.0, 15, {22.38, 22.27, 21.97, 21.64, 22.24, 22.31}},
          {1.0, 20, {28.94, 28.87, 28.48, 27.14, 25.77, 27.94}},
          {1.0, 25, {35.01, 34.94, 34.01, 33.58, 35.33, 35.11}},
          {1.25, 5, {11.70, 11.61, 11.68, 11.91, 10.03, 10.88}},
          {1.25, 10, {19.17, 19.03, 19.12, 19.39, 12.53, 18.26}},
          {1.25, 15, {26.09, 26.07, 25.86, 23.91, 26.57, 26.46}},
          {1.25, 20, {33.09, 33.08, 32.57, 31.41, 29.38, 32.03}},
          {1.25, 25, {41.19, 41.09, 40.22, 37.65, 40.11, 40.67}}}},
        {7, Family::weibull, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T2), TestSpec(TestId::T3), TestSpec(TestId::T4), TestSpec(TestId::T6), TestSpec(TestId::T7), TestSpec(TestId::T8)},
         {
          {1.1, 30, {13.46, 13.49, 13.81, 13.01, 6.79, 8.04, 14.98, 12.33, 12.40, 1.11}},
          {1.1, 40, {14.86, 15.55, 16.25, 15.91, 8.98, 10.46, 18.49, 15.45, 14.89, 2.47}},
          {1.1, 50, {17.25, 18.15, 18.81, 17.64, 10.61, 12.53, 19.51, 16.78, 16.73, 3.96}},
          {1.1, 75, {26.84, 28.53, 30.67, 23.52, 15.19, 17.11, 24.17, 26.17, 22.42, 8.39}},
          {1.1, 100, {31.53, 33.32, 35.27, 29.33, 19.65, 21.78, 28.84, 30.65, 27.67, 13.06}},
          {1.2, 30, {26.36, 27.21, 28.68, 27.93, 15.21, 18.29, 30.73, 25.30, 25.91, 3.20}},
          {1.2, 40, {33.57, 35.37, 36.85, 35.34, 20.55, 24.80, 37.17, 31.44, 32.54, 8.14}},
          {1.2, 50, {38.84, 40.48, 42.34, 42.38, 26.20, 30.75, 43.40, 37.51, 38.94, 13.59}},
          {1.2, 75, {59.90, 62.65, 65.96, 57.82, 40.39, 45.50, 56.17, 57.78, 54.19, 28.61}},
          {1.2, 100, {69.25, 72.04, 75.02, 68.68, 51.65, 56.11, 66.53, 67.17, 64.43, 41.92}},
          {1.3, 30, {44.94, 46.38, 48.59, 46.93, 27.13, 32.82, 48.92, 41.76, 43.58, 8.45}},
          {1.3, 40, {54.94, 56.93, 59.53, 59.59, 38.96, 46.13, 60.55, 53.79, 55.59, 20.23}},
          {1.3, 50, {65.10, 67.81, 70.42, 68.82, 48.28, 55.93, 68.59, 62.31, 64.26, 31.68}},
          {1.3, 75, {86.29, 88.24, 90.24, 85.62, 69.30, 75.29, 84.28, 84.74, 82.00, 59.08}},
          {1.3, 100, {92.84, 94.15, 95.44, 93.17, 81.99, 86.39, 91.82, 91.72, 90.64, 77.28}},
          {1.4, 30, {63.98, 65.89, 68.18, 66.44, 42.34, 51.87, 68.49, 60.30, 62.39, 17.59}},
          {1.4, 40, {75.49, 77.42, 79.83, 79.31, 57.81, 66.60, 79.87, 73.21, 75.05, 37.23}},
          {1.4, 50, {84.53, 86.42, 88.10, 87.80, 69.46, 77.51, 87.26, 82.27, 84.52, 55.24}},
          {1.4, 75, {97.31, 97.98, 98.40, 97.19, 88.89, 92.88, 96.82, 96.58, 95.62, 83.62}},
          {1.4, 100, {99.10, 99.44, 99.58, 99.33, 96.37, 97.49, 99.03, 98.86, 98.84, 94.51}},
          {1.5, 30, {78.30, 80.18, 81.87, 81.58, 58.39, 68.59, 83.49, 75.35, 77.39, 30.73}},
          {1.5, 40, {89.37, 90.84, 92.06, 91.91, 75.21, 83.33, 91.89, 87.82, 89.42, 57.60}},
          {1.5, 50, {94.57, 95.63, 96.53, 96.24, 84.96, 90.79, 96.35, 93.40, 94.34, 75.69}},
          {1.5, 75, {99.57, 99.70, 99.83, 99.64, 97.00, 98.51, 99.55, 99.46, 99.22, 95.58}},
          {1.5, 100, {99.93, 99.95, 99.98, 99.96, 99.63, 99.77, 99.93, 99.91, 99.89, 99.42}}}},
        {8, Family::gamma, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T2), TestSpec(TestId::T3), TestSpec(TestId::T4), TestSpec(TestId::T6), TestSpec(TestId::T7), TestSpec(TestId::T8)},
         {
          {1.2, 30, {14.50, 14.89, 15.67, 14.39, 7.46, 8.64, 6.38, 12.86, 13.32, 1.32}},
          {1.2, 40, {15.72, 16.51, 17.33, 16.52, 9.28, 10.43, 7.26, 14.30, 14.98, 2.49}},
          {1.2, 50, {18.14, 19.13, 20.72, 20.04, 11.67, 12.97, 8.77, 17.22, 18.62, 4.38}},
          {1.2, 75, {27.41, 29.63, 33.10, 25.95, 16.37, 16.80, 11.12, 26.22, 23.33, 8.31}},
          {1.2, 100, {32.16, 34.26, 38.13, 31.52, 20.99, 22.04, 14.75, 30.37, 28.39, 13.41}},
          {1.4, 30, {26.95, 28.57, 31.11, 29.75, 16.32, 18.45, 5.37, 25.07, 26.68, 3.64}},
          {1.4, 40, {33.07, 35.22, 38.48, 38.31, 22.67, 25.02, 6.95, 31.11, 34.09, 8.33}},
          {1.4, 50, {37.26, 40.24, 44.52, 44.40, 28.26, 30.11, 9.40, 36.19, 39.93, 13.94}},
          {1.4, 75, {56.62, 60.78, 66.78, 58.25, 42.01, 41.98, 15.91, 54.20, 52.98, 26.59}},
          {1.4, 100, {68.56, 72.91, 78.40, 72.59, 55.17, 53.96, 23.36, 65.79, 66.63, 39.61}},
          {1.6, 30, {42.27, 44.77, 49.04, 48.29, 28.20, 32.08, 3.95, 39.71, 42.71, 8.45}},
          {1.6, 40, {52.05, 55.48, 60.83, 59.98, 39.33, 42.62, 6.06, 49.50, 54.25, 18.30}},
          {1.6, 50, {59.84, 63.92, 69.77, 68.61, 49.36, 51.06, 8.60, 57.54, 62.90, 28.84}},
          {1.6, 75, {82.09, 86.10, 90.19, 86.15, 70.99, 68.87, 18.92, 79.69, 81.16, 52.36}},
          {1.6, 100, {89.64, 92.81, 95.79, 93.43, 84.39, 79.66, 32.11, 88.17, 89.87, 68.77}},
          {1.8, 30, {57.28, 60.53, 65.60, 64.49, 40.72, 46.42, 2.14, 54.21, 58.70, 15.72}},
          {1.8, 40, {68.78, 72.96, 78.04, 78.45, 57.74, 60.30, 4.17, 67.11, 72.24, 32.58}},
          {1.8, 50, {78.61, 82.66, 87.13, 86.35, 70.81, 69.79, 6.68, 75.24, 81.36, 48.11}},
          {1.8, 75, {93.59, 95.98, 97.88, 96.32, 89.35, 85.14, 19.70, 92.13, 93.66, 74.16}},
          {1.8, 100, {97.72, 98.76, 99.54, 99.11, 96.49, 93.17, 35.02, 97.11, 98.17, 87.50}},
          {2.0, 30, {70.68, 74.26, 79.04, 78.67, 55.26, 59.35, 1.07, 66.47, 71.81, 24.39}},
          {2.0, 40, {81.85, 85.50, 89.63, 89.51, 72.96, 74.35, 2.31, 79.48, 84.63, 47.24}},
          {2.0, 50, {89.37, 92.27, 95.07, 94.91, 84.29, 83.04, 4.99, 87.00, 91.81, 64.06}},
          {2.0, 75, {98.16, 99.00, 99.70, 99.19, 96.65, 94.27, 17.31, 97.76, 98.25, 87.98}},
          {2.0, 100, {99.70, 99.87, 99.96, 99.95, 99.37, 98.27, 36.28, 99.64, 99.80, 96.47}}}},
        {9, Family::lfr, {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), TestSpec(TestId::T1), TestSpec(TestId::T2), TestSpec(TestId::T3), TestSpec(TestId::T4), TestSpec(TestId::T6), TestSpec(TestId::T7), TestSpec(TestId::T8)},
         {
          {0.25, 30, {14.52, 14.68, 14.49, 14.03, 7.12, 9.20, 27.05, 15.23, 13.74, 1.42}},
          {0.25, 40, {18.28, 17.99, 17.75, 17.37, 9.77, 12.45, 30.96, 18.44, 17.03, 3.01}},
          {0.25, 50, {22.02, 21.68, 20.82, 20.45, 12.60, 16.09, 35.55, 21.59, 19.96, 5.40}},
          {0.25, 75, {35.99, 36.11, 35.06, 27.30, 18.27, 23.86, 44.89, 35.07, 26.97, 12.33}},
          {0.25, 100, {42.70, 42.43, 40.70, 33.39, 23.84, 31.78, 52.82, 41.59, 32.69, 19.67}},
          {0.5, 30, {25.14, 24.90, 24.37, 23.30, 12.59, 16.42, 48.94, 24.73, 22.96, 2.65}},
          {0.5, 40, {30.84, 30.79, 30.29, 31.08, 18.47, 24.54, 58.11, 32.86, 30.57, 7.40}},
          {0.5, 50, {39.09, 38.88, 37.14, 36.13, 23.00, 30.38, 64.26, 38.31, 35.52, 12.60}},
          {0.5, 75, {60.54, 60.54, 58.65, 50.37, 35.67, 47.29, 77.42, 59.35, 49.07, 29.25}},
          {0.5, 100, {72.38, 71.60, 69.13, 62.00, 46.72, 60.99, 86.33, 70.47, 60.60, 45.36}},
          {0.75, 30, {34.24, 33.85, 32.77, 31.22, 17.78, 23.48, 66.20, 33.36, 31.00, 4.70}},
          {0.75, 40, {44.04, 43.72, 42.32, 40.55, 25.43, 33.35, 74.40, 42.92, 39.97, 11.49}},
          {0.75, 50, {51.21, 51.03, 48.74, 49.47, 32.30, 43.60, 81.43, 51.68, 48.33, 19.77}},
          {0.75, 75, {75.50, 75.25, 73.53, 65.55, 49.24, 63.37, 91.33, 74.40, 64.14, 44.19}},
          {0.75, 100, {85.72, 85.41, 83.39, 77.97, 63.36, 77.48, 95.92, 84.82, 76.54, 64.02}},
          {1.0, 30, {41.50, 41.32, 40.23, 39.06, 22.12, 30.14, 77.66, 40.54, 38.52, 6.75}},
          {1.0, 40, {52.14, 51.66, 50.06, 49.68, 32.02, 42.43, 85.22, 51.55, 48.53, 16.77}},
          {1.0, 50, {62.41, 62.16, 59.58, 58.91, 41.11, 53.73, 90.12, 61.58, 57.59, 28.36}},
          {1.0, 75, {84.92, 84.67, 82.81, 76.59, 60.63, 74.31, 96.35, 83.86, 75.48, 56.77}},
          {1.0, 100, {92.50, 91.97, 90.46, 86.88, 75.08, 86.98, 98.74, 91.64, 85.54, 76.75}},
          {1.25, 30, {48.14, 48.30, 47.22, 44.58, 27.06, 35.31, 84.82, 46.06, 43.89, 9.01}},
          {1.25, 40, {59.20, 59.37, 57.48, 56.67, 37.33, 49.08, 91.19, 58.65, 55.36, 20.63}},
          {1.25, 50, {69.38, 69.08, 67.02, 66.81, 48.79, 61.33, 94.23, 69.08, 66.00, 35.62}},
          {1.25, 75, {90.07, 89.85, 88.40, 83.26, 68.38, 81.94, 98.65, 89.32, 82.32, 66.17}},
          {1.25, 100, {95.72, 95.41, 94.22, 92.13, 82.82, 92.24, 99.50, 95.09, 91.32, 84.84}}}}};
    return tables;
}

inline const ReferenceTable& reference_table(int id) {
    for (const auto& t : reference_tables()) {
        if (t.id == id) return t;
    }
    throw Error(ErrorCode::invalid_parameter, "no table " + std::to_string(id) + " (valid: 1-9)");
}

// Published value for one cell, if the table has it.
inline std::optional<double> reference_value(int table_id, const TestSpec& spec, std::size_t n,
                                             const AlternativeModel& model) {
    const ReferenceTable& table = reference_table(table_id);
    const bool null_row = model.family() == Family::exponential;
    if (null_row != table.is_size_table()) return std::nullopt;
    if (!null_row && model.family() != table.family) return std::nullopt;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (!(table.columns[c] == spec)) continue;
        for (const auto& row : table.rows) {
            if (row.n != n) continue;
            if (!null_row && std::abs(row.theta - model.theta()) > 1e-9) continue;
            return row.pct[c];
        }
    }
    return std::nullopt;
}

} // namespace nbue

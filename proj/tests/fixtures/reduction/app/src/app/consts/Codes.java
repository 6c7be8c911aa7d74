// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.consts;

public class Codes {
  public static final int ALPHA_CODE = 1;
  public static final int BRAVO_CODE = 2;
  public static final int CEDAR_CODE = 3;
  public static final int DELTA_CODE = 4;
  public static final int EMBER_CODE = 5;
  public static final int FJORD_CODE = 6;
  public static final int GAMMA_CODE = 7;
  public static final int HAZEL_CODE = 8;
  public static final int IVORY_CODE = 9;
  public static final int JADE_CODE = 10;
  public static final int KAPPA_CODE = 11;
  public static final int LUNAR_CODE = 12;
  public static final int MAPLE_CODE = 13;
  public static final int NOBLE_CODE = 14;
  public static final int OMEGA_CODE = 15;
  public static final int PRISM_CODE = 16;
  public static final int QUARTZ_CODE = 17;
  public static final int RAVEN_CODE = 18;
  public static final int SIGMA_CODE = 19;
  public static final int TANGO_CODE = 20;
  public static final int UMBRA_CODE = 21;
  public static final int VELVET_CODE = 22;
  public static final int WILLOW_CODE = 23;
  public static final int XENON_CODE = 24;
  public static final int YONDER_CODE = 25;
  public static final int ZEPHYR_CODE = 26;
  public static final int AMBER_CODE = 27;
  public static final int BASALT_CODE = 28;
  public static final int COBALT_CODE = 29;
  public static final int DUNE_CODE = 30;
  public static final int ECHO_CODE = 31;
  public static final int FLINT_CODE = 32;
  public static final int GROVE_CODE = 33;
  public static final int HARBOR_CODE = 34;
  public static final int INDIGO_CODE = 35;
  public static final int JUNIPER_CODE = 36;
  public static final int KESTREL_CODE = 37;
  public static final int LAGOON_CODE = 38;
  public static final int MESA_CODE = 39;
  public static final int NECTAR_CODE = 40;
  public static final int ONYX_CODE = 41;
  public static final int PEBBLE_CODE = 42;
  public static final int QUILL_CODE = 43;
  public static final int RIDGE_CODE = 44;
  public static final int SPRUCE_CODE = 45;
  public static final int THISTLE_CODE = 46;
  public static final int UPLAND_CODE = 47;
  public static final int VALE_CODE = 48;
  public static final int WREN_CODE = 49;
  public static final int YARROW_CODE = 50;
  public static final int ZINC_CODE = 51;
  public static final int ASPEN_CODE = 52;
  public static final int BIRCH_CODE = 53;
  public static final int CORAL_CODE = 54;
  public static final int DAWN_CODE = 55;
  public static final int ELM_CODE = 56;
  public static final int FERN_CODE = 57;
  public static final int GLADE_CODE = 58;
  public static final int HERON_CODE = 59;
  public static final int IRIS_CODE = 60;
}

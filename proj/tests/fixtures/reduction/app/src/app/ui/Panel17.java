// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.ui;

import app.consts.*;

public class Panel17 {
  private final Widget widget;

  public Panel17(Widget widget) {
    this.widget = widget;
  }

  public void configure() {
    widget.setLevel(Levels.COBALT_LEVEL);
    widget.setMargin(Margins.JADE_MARGIN);
  }
}

# -*- coding: utf-8 -*-
from __future__ import absolute_import, unicode_literals, print_function

import importlib


class Configurable(object):
    """
    Holds a `config` table of `{name: [default, description]}` entries.

    Subclasses fill `self.config` before calling `super().__init__(**kwargs)`; keyword
    arguments matching a config name override its default.
    """

    def __init__(self, **kwargs):
        if not hasattr(self, 'config'):
            self.config = {}
        self.set_configs(kwargs)

    def get_config(self, key, default=''):
        if key in self.config:
            return self.config[key][0]
        return default

    def get_configs(self):
        return dict((key, self.get_config(key)) for key in self.config.keys())

    def get_config_info(self):
        return [(key, self.config[key][1]) for key in sorted(self.config.keys())]

    def set_config(self, key, value):
        if key not in self.config:
            return
        self.config[key][0] = value

    def set_configs(self, items):
        for key, value in dict(items).items():
            self.set_config(key, value)


class TemplateRenderMixin(object):
    """
    Mixin for commands which render a text summary as part of their output
    """

    def __init__(self, template_adapter='', *args, **kwargs):
        self.template_adapter = template_adapter
        super(TemplateRenderMixin, self).__init__(*args, **kwargs)

    def get_template_adapter(self):
        module_name, class_name = self.template_adapter.rsplit(".", 1)
        my_module = importlib.import_module(module_name)
        AdapterClass = getattr(my_module, class_name)
        return AdapterClass()

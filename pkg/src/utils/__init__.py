"""
工具：文本解析（parsers）、YAML 文档（documents）、并行搜索（parallel）

子模块按需直接导入；parsers / documents 依赖各领域包，不在这里预先加载
"""
